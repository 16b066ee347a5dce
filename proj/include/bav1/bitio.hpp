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

#ifndef BAV1_BITIO_HPP_
#define BAV1_BITIO_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bav1 {

// Error raised when a payload ends early or a stream violates a structural
// constraint. Carries the byte offset where parsing stopped.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) +
                           ")"),
        byte_offset_(byte_offset) {}
  size_t byte_offset() const { return byte_offset_; }

 private:
  size_t byte_offset_;
};

// Adaptive cumulative distribution over an alphabet of up to 16 symbols.
// cumulative(i) holds P(symbol <= i) in 15-bit precision; the last entry is
// always kProbTotal. Every symbol keeps a probability of at least
// 1/kProbTotal through any update sequence.
//
// Update rule: each cumulative entry moves toward its target (0 for entries
// before the coded symbol, kProbTotal at or after it) by
// (target - value) >> rate, where rate = rate_base + (updates > 15) +
// (updates > 31). Larger rates adapt more slowly but estimate stationary
// sources more accurately; kDefaultRateBase keeps i.i.d. coding within 1% of
// empirical entropy.
class Cdf {
 public:
  static constexpr int kMaxSymbols = 16;
  static constexpr int kProbBits = 15;
  static constexpr uint16_t kProbTotal = 1 << kProbBits;
  static constexpr int kDefaultRateBase = 6;

  // Uniform distribution over `num_symbols`.
  explicit Cdf(int num_symbols, int rate_base = kDefaultRateBase);

  // Explicit initial cumulative values (must be strictly increasing, end at
  // kProbTotal). Used for skewed context initializations.
  Cdf(std::initializer_list<uint16_t> cumulative,
      int rate_base = kDefaultRateBase);

  int num_symbols() const { return num_symbols_; }
  int rate_base() const { return rate_base_; }
  int update_count() const { return update_count_; }

  // Effective adaptation rate for the next update.
  int rate() const {
    return rate_base_ + (update_count_ > 15) + (update_count_ > 31);
  }

  uint16_t cumulative(int i) const { return cum_[i]; }
  uint16_t span_low(int symbol) const {
    return symbol == 0 ? 0 : cum_[symbol - 1];
  }
  uint16_t span_high(int symbol) const { return cum_[symbol]; }

  // Index of the first symbol whose cumulative value exceeds `target`.
  int FindSymbol(uint32_t target) const;

  // Moves probability mass toward `symbol` and bumps the update counter.
  void Update(int symbol);

  // -log2(P(symbol)); used for rate estimation in RD search.
  double BitCost(int symbol) const;

 private:
  std::array<uint16_t, kMaxSymbols> cum_{};
  int num_symbols_ = 0;
  int rate_base_ = kDefaultRateBase;
  int update_count_ = 0;
};

// Free-function form of the adaptation rule.
inline Cdf UpdateCdf(Cdf cdf, int symbol) {
  cdf.Update(symbol);
  return cdf;
}

// Carry-less byte-oriented range encoder with 15-bit probability precision.
// Symbol spans come from a Cdf, which is updated in lockstep with the
// decoder. Equiprobable literal bits and zeroth-order Exp-Golomb values are
// coded through the same interval arithmetic.
class RangeEncoder {
 public:
  void EncodeSymbol(Cdf& cdf, int symbol);
  void EncodeBit(int bit);            // equiprobable
  void EncodeBits(uint32_t value, int num_bits);  // MSB first
  void EncodeExpGolomb(uint32_t value);

  // Flushes the interval state and returns the byte stream. The encoder is
  // spent afterwards.
  std::vector<uint8_t> Finish();

  size_t byte_count() const { return bytes_.size(); }

 private:
  void EncodeSpan(uint32_t low, uint32_t high);
  void Renormalize();

  static constexpr uint32_t kTop = 1u << 24;
  static constexpr uint32_t kBottom = 1u << 16;

  uint32_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  std::vector<uint8_t> bytes_;
  bool finished_ = false;
};

// Decoding mirror of RangeEncoder. Reads from a caller-owned byte span and
// throws DecodeError when asked to consume past its end.
class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  int DecodeSymbol(Cdf& cdf);
  int DecodeBit();
  uint32_t DecodeBits(int num_bits);
  uint32_t DecodeExpGolomb();

  size_t byte_position() const { return position_; }

 private:
  void Renormalize();
  uint8_t NextByte();
  void Prime();

  static constexpr uint32_t kTop = 1u << 24;
  static constexpr uint32_t kBottom = 1u << 16;

  std::span<const uint8_t> bytes_;
  size_t position_ = 0;
  uint32_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint32_t code_ = 0;
  bool primed_ = false;
};

// MSB-first raw bit writer/reader for byte-aligned header sections.
class BitWriter {
 public:
  void WriteBit(int bit);
  void WriteBits(uint32_t value, int num_bits);  // MSB first
  void WriteExpGolomb(uint32_t value);
  std::vector<uint8_t> Finish();  // zero-pads to a byte boundary

 private:
  std::vector<uint8_t> bytes_;
  uint32_t acc_ = 0;
  int acc_bits_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> bytes, size_t base_offset = 0)
      : bytes_(bytes), base_offset_(base_offset) {}

  int ReadBit();
  uint32_t ReadBits(int num_bits);
  uint32_t ReadExpGolomb();
  size_t bytes_consumed() const { return position_; }

 private:
  std::span<const uint8_t> bytes_;
  size_t base_offset_ = 0;
  size_t position_ = 0;
  uint32_t acc_ = 0;
  int acc_bits_ = 0;
};

}  // namespace bav1

#endif  // BAV1_BITIO_HPP_
