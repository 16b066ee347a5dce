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

#ifndef BAV1_CCSO_HPP_
#define BAV1_CCSO_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "bav1/plane.hpp"

namespace bav1 {

inline constexpr int kCcsoBins = 81;              // 3^4
inline constexpr int kCcsoMaxOffset = 15;
inline constexpr int kCcsoBlockSizeChroma = 32;   // 64x64 luma grid
inline constexpr std::array<int, 4> kCcsoThresholds = {8, 16, 32, 64};

// Per-component offset table driven by the quantized deltas of the 5-sample
// luma diamond around the co-located luma sample.
struct CcsoLut {
  std::array<int8_t, kCcsoBins> offsets{};
  int threshold_index = 1;  // into kCcsoThresholds; T = 16 by default
  bool frame_enabled = false;
  // Row-major flags over the chroma plane in 32x32 chroma blocks.
  std::vector<uint8_t> block_enabled;
  int blocks_x = 0;
  int blocks_y = 0;

  int threshold() const { return kCcsoThresholds[threshold_index]; }
};

// d = -1 if p - r_l <= -t, +1 if p - r_l >= t, else 0.
inline int QuantizeDelta(int p, int r_l, int t) {
  const int diff = p - r_l;
  if (diff <= -t) return -1;
  if (diff >= t) return 1;
  return 0;
}

// Bin index from the four quantized deltas of the diamond (above, left,
// right, below), border-replicated. (luma_x, luma_y) addresses the co-located
// luma sample, i.e. twice the chroma position.
int CcsoClassify(const PlaneU8& recon_luma, int luma_x, int luma_y, int t);

struct CcsoDeriveResult {
  CcsoLut lut;
  double sse_before = 0;  // over the evaluated region
  double sse_after = 0;
};

// Per-bin offsets = clamped rounded mean error of the samples falling in the
// bin, then block flags keep only blocks the filter improves, then the frame
// flag requires a net gain. Statistics and gating are restricted to
// [0, eval_w) x [0, eval_h) so padded regions cannot flip a decision.
CcsoDeriveResult DeriveCcsoLut(const PlaneU8& source_chroma,
                               const PlaneU8& recon_chroma,
                               const PlaneU8& recon_luma, int t_index,
                               int eval_w, int eval_h);

// Tries every threshold and keeps the one with the lowest filtered SSE.
CcsoDeriveResult DeriveCcsoLutBestThreshold(const PlaneU8& source_chroma,
                                            const PlaneU8& recon_chroma,
                                            const PlaneU8& recon_luma,
                                            int eval_w, int eval_h);

// out = clamp(r_c + offsets[classify(...)]) on enabled blocks; disabled
// blocks and disabled frames copy through.
PlaneU8 ApplyCcso(const PlaneU8& recon_chroma, const PlaneU8& recon_luma,
                  const CcsoLut& lut);

}  // namespace bav1

#endif  // BAV1_CCSO_HPP_
