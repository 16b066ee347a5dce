// Copyright 2026 The bav1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bav1/bitio.hpp"

#include <cassert>
#include <cmath>

namespace bav1 {

Cdf::Cdf(int num_symbols, int rate_base)
    : num_symbols_(num_symbols), rate_base_(rate_base) {
  assert(num_symbols >= 1 && num_symbols <= kMaxSymbols);
  for (int i = 0; i < num_symbols; ++i) {
    cum_[i] = static_cast<uint16_t>(
        (static_cast<uint32_t>(i + 1) * kProbTotal) / num_symbols);
  }
}

Cdf::Cdf(std::initializer_list<uint16_t> cumulative, int rate_base)
    : num_symbols_(static_cast<int>(cumulative.size())),
      rate_base_(rate_base) {
  assert(num_symbols_ >= 1 && num_symbols_ <= kMaxSymbols);
  int i = 0;
  uint16_t prev = 0;
  for (uint16_t v : cumulative) {
    assert(v > prev);
    cum_[i++] = v;
    prev = v;
  }
  assert(prev == kProbTotal);
  (void)prev;
}

int Cdf::FindSymbol(uint32_t target) const {
  for (int s = 0; s < num_symbols_; ++s) {
    if (cum_[s] > target) return s;
  }
  return num_symbols_ - 1;
}

void Cdf::Update(int symbol) {
  assert(symbol >= 0 && symbol < num_symbols_);
  const int rate = this->rate();
  for (int i = 0; i < num_symbols_ - 1; ++i) {
    const int target = (i >= symbol) ? kProbTotal : 0;
    cum_[i] = static_cast<uint16_t>(cum_[i] + ((target - cum_[i]) >> rate));
  }
  // Re-impose the minimum span of 1 per symbol in both directions; the last
  // entry is pinned at kProbTotal.
  int prev = 0;
  for (int i = 0; i < num_symbols_ - 1; ++i) {
    if (cum_[i] < prev + 1) cum_[i] = static_cast<uint16_t>(prev + 1);
    prev = cum_[i];
  }
  int next = kProbTotal;
  for (int i = num_symbols_ - 2; i >= 0; --i) {
    if (cum_[i] > next - 1) cum_[i] = static_cast<uint16_t>(next - 1);
    next = cum_[i];
  }
  if (update_count_ < 64) ++update_count_;
}

double Cdf::BitCost(int symbol) const {
  const double p =
      static_cast<double>(span_high(symbol) - span_low(symbol)) / kProbTotal;
  return -std::log2(p);
}

void RangeEncoder::EncodeSpan(uint32_t low, uint32_t high) {
  assert(!finished_);
  assert(low < high && high <= Cdf::kProbTotal);
  const uint32_t r = range_ >> Cdf::kProbBits;
  low_ += r * low;
  range_ = r * (high - low);
  Renormalize();
}

void RangeEncoder::Renormalize() {
  while (true) {
    if ((low_ ^ (low_ + range_)) < kTop) {
      // Top byte settled; fall through to emit.
    } else if (range_ < kBottom) {
      // Underflow: shrink the interval to the next 2^16 boundary so the top
      // bytes settle without carry propagation.
      range_ = (0u - low_) & (kBottom - 1);
    } else {
      return;
    }
    bytes_.push_back(static_cast<uint8_t>(low_ >> 24));
    low_ <<= 8;
    range_ <<= 8;
  }
}

void RangeEncoder::EncodeSymbol(Cdf& cdf, int symbol) {
  EncodeSpan(cdf.span_low(symbol), cdf.span_high(symbol));
  cdf.Update(symbol);
}

void RangeEncoder::EncodeBit(int bit) {
  constexpr uint32_t kHalf = Cdf::kProbTotal / 2;
  if (bit) {
    EncodeSpan(kHalf, Cdf::kProbTotal);
  } else {
    EncodeSpan(0, kHalf);
  }
}

void RangeEncoder::EncodeBits(uint32_t value, int num_bits) {
  assert(num_bits >= 0 && num_bits <= 32);
  for (int i = num_bits - 1; i >= 0; --i) {
    EncodeBit(static_cast<int>((value >> i) & 1));
  }
}

void RangeEncoder::EncodeExpGolomb(uint32_t value) {
  assert(value < 0xFFFFFFFFu);
  const uint64_t shifted = static_cast<uint64_t>(value) + 1;
  int length = 0;
  while ((shifted >> length) > 1) ++length;
  for (int i = 0; i < length; ++i) EncodeBit(0);
  for (int i = length; i >= 0; --i) {
    EncodeBit(static_cast<int>((shifted >> i) & 1));
  }
}

std::vector<uint8_t> RangeEncoder::Finish() {
  assert(!finished_);
  finished_ = true;
  for (int i = 0; i < 4; ++i) {
    bytes_.push_back(static_cast<uint8_t>(low_ >> 24));
    low_ <<= 8;
  }
  return std::move(bytes_);
}

uint8_t RangeDecoder::NextByte() {
  if (position_ >= bytes_.size()) {
    throw DecodeError("truncated payload", position_);
  }
  return bytes_[position_++];
}

void RangeDecoder::Prime() {
  for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | NextByte();
  primed_ = true;
}

void RangeDecoder::Renormalize() {
  while (true) {
    if ((low_ ^ (low_ + range_)) < kTop) {
    } else if (range_ < kBottom) {
      range_ = (0u - low_) & (kBottom - 1);
    } else {
      return;
    }
    code_ = (code_ << 8) | NextByte();
    low_ <<= 8;
    range_ <<= 8;
  }
}

int RangeDecoder::DecodeSymbol(Cdf& cdf) {
  if (!primed_) Prime();
  const uint32_t r = range_ >> Cdf::kProbBits;
  uint32_t target = (code_ - low_) / r;
  if (target >= Cdf::kProbTotal) target = Cdf::kProbTotal - 1;
  const int symbol = cdf.FindSymbol(target);
  const uint32_t low = cdf.span_low(symbol);
  const uint32_t high = cdf.span_high(symbol);
  low_ += r * low;
  range_ = r * (high - low);
  Renormalize();
  cdf.Update(symbol);
  return symbol;
}

int RangeDecoder::DecodeBit() {
  if (!primed_) Prime();
  constexpr uint32_t kHalf = Cdf::kProbTotal / 2;
  const uint32_t r = range_ >> Cdf::kProbBits;
  uint32_t target = (code_ - low_) / r;
  if (target >= Cdf::kProbTotal) target = Cdf::kProbTotal - 1;
  const int bit = target >= kHalf ? 1 : 0;
  if (bit) {
    low_ += r * kHalf;
    range_ = r * kHalf;
  } else {
    range_ = r * kHalf;
  }
  Renormalize();
  return bit;
}

uint32_t RangeDecoder::DecodeBits(int num_bits) {
  assert(num_bits >= 0 && num_bits <= 32);
  uint32_t value = 0;
  for (int i = 0; i < num_bits; ++i) {
    value = (value << 1) | static_cast<uint32_t>(DecodeBit());
  }
  return value;
}

uint32_t RangeDecoder::DecodeExpGolomb() {
  int length = 0;
  while (DecodeBit() == 0) {
    if (++length > 32) {
      throw DecodeError("malformed Exp-Golomb prefix", position_);
    }
  }
  uint64_t value = 1;
  for (int i = 0; i < length; ++i) {
    value = (value << 1) | static_cast<uint64_t>(DecodeBit());
  }
  return static_cast<uint32_t>(value - 1);
}

void BitWriter::WriteBit(int bit) {
  acc_ = (acc_ << 1) | static_cast<uint32_t>(bit & 1);
  if (++acc_bits_ == 8) {
    bytes_.push_back(static_cast<uint8_t>(acc_));
    acc_ = 0;
    acc_bits_ = 0;
  }
}

void BitWriter::WriteBits(uint32_t value, int num_bits) {
  for (int i = num_bits - 1; i >= 0; --i) {
    WriteBit(static_cast<int>((value >> i) & 1));
  }
}

void BitWriter::WriteExpGolomb(uint32_t value) {
  const uint64_t shifted = static_cast<uint64_t>(value) + 1;
  int length = 0;
  while ((shifted >> length) > 1) ++length;
  for (int i = 0; i < length; ++i) WriteBit(0);
  for (int i = length; i >= 0; --i) {
    WriteBit(static_cast<int>((shifted >> i) & 1));
  }
}

std::vector<uint8_t> BitWriter::Finish() {
  while (acc_bits_ != 0) WriteBit(0);
  return std::move(bytes_);
}

int BitReader::ReadBit() {
  if (acc_bits_ == 0) {
    if (position_ >= bytes_.size()) {
      throw DecodeError("truncated header section", base_offset_ + position_);
    }
    acc_ = bytes_[position_++];
    acc_bits_ = 8;
  }
  --acc_bits_;
  return static_cast<int>((acc_ >> acc_bits_) & 1);
}

uint32_t BitReader::ReadBits(int num_bits) {
  uint32_t value = 0;
  for (int i = 0; i < num_bits; ++i) {
    value = (value << 1) | static_cast<uint32_t>(ReadBit());
  }
  return value;
}

uint32_t BitReader::ReadExpGolomb() {
  int length = 0;
  while (ReadBit() == 0) {
    if (++length > 32) {
      throw DecodeError("malformed Exp-Golomb prefix",
                        base_offset_ + position_);
    }
  }
  uint64_t value = 1;
  for (int i = 0; i < length; ++i) {
    value = (value << 1) | static_cast<uint64_t>(ReadBit());
  }
  return static_cast<uint32_t>(value - 1);
}

}  // namespace bav1
