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

#include "bav1/ccso.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace bav1 {

int CcsoClassify(const PlaneU8& recon_luma, int luma_x, int luma_y, int t) {
  const int r_l = SampleClamped(recon_luma, luma_x, luma_y);
  const int d0 = QuantizeDelta(SampleClamped(recon_luma, luma_x, luma_y - 1),
                               r_l, t);
  const int d1 = QuantizeDelta(SampleClamped(recon_luma, luma_x - 1, luma_y),
                               r_l, t);
  const int d2 = QuantizeDelta(SampleClamped(recon_luma, luma_x + 1, luma_y),
                               r_l, t);
  const int d3 = QuantizeDelta(SampleClamped(recon_luma, luma_x, luma_y + 1),
                               r_l, t);
  return (d0 + 1) + 3 * (d1 + 1) + 9 * (d2 + 1) + 27 * (d3 + 1);
}

namespace {

double BlockSse(const PlaneU8& a, const PlaneU8& b, int x0, int y0, int x1,
                int y1) {
  double sse = 0;
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const double d = static_cast<double>(a(y, x)) - b(y, x);
      sse += d * d;
    }
  }
  return sse;
}

}  // namespace

CcsoDeriveResult DeriveCcsoLut(const PlaneU8& source_chroma,
                               const PlaneU8& recon_chroma,
                               const PlaneU8& recon_luma, int t_index,
                               int eval_w, int eval_h) {
  assert(source_chroma.rows() == recon_chroma.rows());
  assert(source_chroma.cols() == recon_chroma.cols());
  eval_w = std::min(eval_w, static_cast<int>(recon_chroma.cols()));
  eval_h = std::min(eval_h, static_cast<int>(recon_chroma.rows()));

  CcsoDeriveResult result;
  CcsoLut& lut = result.lut;
  lut.threshold_index = t_index;
  const int t = lut.threshold();

  // Pass 1: per-bin mean of source - recon.
  std::array<int64_t, kCcsoBins> error_sum{};
  std::array<int64_t, kCcsoBins> count{};
  for (int y = 0; y < eval_h; ++y) {
    for (int x = 0; x < eval_w; ++x) {
      const int bin = CcsoClassify(recon_luma, 2 * x, 2 * y, t);
      error_sum[bin] += source_chroma(y, x) - recon_chroma(y, x);
      ++count[bin];
    }
  }
  for (int b = 0; b < kCcsoBins; ++b) {
    if (count[b] == 0) continue;
    const double mean = static_cast<double>(error_sum[b]) / count[b];
    const long rounded = std::lround(mean);
    lut.offsets[b] = static_cast<int8_t>(
        std::clamp<long>(rounded, -kCcsoMaxOffset, kCcsoMaxOffset));
  }

  // Pass 2: block gating on SSE, evaluated over the visible region only.
  lut.blocks_x = (static_cast<int>(recon_chroma.cols()) +
                  kCcsoBlockSizeChroma - 1) / kCcsoBlockSizeChroma;
  lut.blocks_y = (static_cast<int>(recon_chroma.rows()) +
                  kCcsoBlockSizeChroma - 1) / kCcsoBlockSizeChroma;
  lut.block_enabled.assign(static_cast<size_t>(lut.blocks_x) * lut.blocks_y,
                           0);

  lut.frame_enabled = true;  // provisional, needed by ApplyCcso
  const PlaneU8 filtered_all = [&] {
    CcsoLut all = lut;
    std::fill(all.block_enabled.begin(), all.block_enabled.end(), uint8_t{1});
    return ApplyCcso(recon_chroma, recon_luma, all);
  }();

  double total_before = 0;
  double total_after = 0;
  for (int by = 0; by < lut.blocks_y; ++by) {
    for (int bx = 0; bx < lut.blocks_x; ++bx) {
      const int x0 = bx * kCcsoBlockSizeChroma;
      const int y0 = by * kCcsoBlockSizeChroma;
      const int x1 = std::min(x0 + kCcsoBlockSizeChroma, eval_w);
      const int y1 = std::min(y0 + kCcsoBlockSizeChroma, eval_h);
      if (x0 >= x1 || y0 >= y1) continue;
      const double before = BlockSse(source_chroma, recon_chroma, x0, y0, x1, y1);
      const double after = BlockSse(source_chroma, filtered_all, x0, y0, x1, y1);
      const bool enable = after < before;
      lut.block_enabled[static_cast<size_t>(by) * lut.blocks_x + bx] =
          enable ? 1 : 0;
      total_before += before;
      total_after += enable ? after : before;
    }
  }

  lut.frame_enabled = total_after < total_before;
  result.sse_before = total_before;
  result.sse_after = lut.frame_enabled ? total_after : total_before;
  return result;
}

CcsoDeriveResult DeriveCcsoLutBestThreshold(const PlaneU8& source_chroma,
                                            const PlaneU8& recon_chroma,
                                            const PlaneU8& recon_luma,
                                            int eval_w, int eval_h) {
  CcsoDeriveResult best;
  bool first = true;
  for (int t_index = 0; t_index < static_cast<int>(kCcsoThresholds.size());
       ++t_index) {
    CcsoDeriveResult candidate = DeriveCcsoLut(
        source_chroma, recon_chroma, recon_luma, t_index, eval_w, eval_h);
    if (first || candidate.sse_after < best.sse_after) {
      best = std::move(candidate);
      first = false;
    }
  }
  return best;
}

PlaneU8 ApplyCcso(const PlaneU8& recon_chroma, const PlaneU8& recon_luma,
                  const CcsoLut& lut) {
  PlaneU8 out = recon_chroma;
  if (!lut.frame_enabled) return out;
  const int t = lut.threshold();
  const int w = static_cast<int>(recon_chroma.cols());
  const int h = static_cast<int>(recon_chroma.rows());
  for (int y = 0; y < h; ++y) {
    const int by = y / kCcsoBlockSizeChroma;
    for (int x = 0; x < w; ++x) {
      const int bx = x / kCcsoBlockSizeChroma;
      if (!lut.block_enabled[static_cast<size_t>(by) * lut.blocks_x + bx]) {
        continue;
      }
      const int bin = CcsoClassify(recon_luma, 2 * x, 2 * y, t);
      if (lut.offsets[bin] == 0) continue;
      out(y, x) = ClampPixel<uint8_t>(recon_chroma(y, x) + lut.offsets[bin]);
    }
  }
  return out;
}

}  // namespace bav1
