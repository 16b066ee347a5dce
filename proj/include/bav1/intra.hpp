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

#ifndef BAV1_INTRA_HPP_
#define BAV1_INTRA_HPP_

#include <array>
#include <optional>
#include <vector>

#include "bav1/partition.hpp"
#include "bav1/plane.hpp"

namespace bav1 {

// The eight nominal prediction angles, degrees. 90 is vertical (predict from
// above), 180 horizontal (from the left).
inline constexpr std::array<int, 8> kNominalAngles = {45,  67,  90,  113,
                                                      135, 157, 180, 203};
// Nonzero delta refinements around a nominal angle, in set order.
inline constexpr std::array<int, 6> kDeltaSteps = {-9, -6, -3, 3, 6, 9};
inline constexpr int kMaxRefLine = 2;

enum class IntraModeKind : uint8_t { kDc, kPaeth, kDirectional };

struct IntraMode {
  IntraModeKind kind = IntraModeKind::kDc;
  int nominal = 0;  // index into kNominalAngles when directional
  int delta = 0;    // degrees; multiple of 3 in [-9, 9]

  bool directional() const { return kind == IntraModeKind::kDirectional; }
  int angle() const { return kNominalAngles[nominal] + delta; }

  static IntraMode Dc() { return {}; }
  static IntraMode Paeth() { return {IntraModeKind::kPaeth, 0, 0}; }
  static IntraMode Directional(int nominal, int delta = 0) {
    return {IntraModeKind::kDirectional, nominal, delta};
  }
  bool operator==(const IntraMode&) const = default;
};

// Reference samples for one block and one reference line. AboveAt(x) is the
// sample at plane position (x, -1-line) and LeftAt(y) the sample at
// (-1-line, y), both in block-local coordinates; index -1 is the corner.
// Everything outside the filled extent is replicated, so any index within
// the padded storage is safe to read.
struct RefSamples {
  static constexpr int kPad = 8;
  static constexpr int kMaxExtent = 2 * kSuperblockSize + kSuperblockSize + 16;

  std::array<uint8_t, kPad + 1 + kMaxExtent> above{};
  std::array<uint8_t, kPad + 1 + kMaxExtent> left{};
  int line = 0;
  bool have_above = false;
  bool have_left = false;
  int above_count = 0;  // filled samples at x >= 0
  int left_count = 0;

  uint8_t AboveAt(int x) const { return above[kPad + 1 + x]; }
  uint8_t LeftAt(int y) const { return left[kPad + 1 + y]; }
  uint8_t Corner() const { return AboveAt(-1); }
};

// Decoded-region information for reference availability. All coordinates are
// plane-local; sb_size is 64 for luma and 32 for chroma.
struct RefContext {
  int sb_x = 0;
  int sb_y = 0;
  int sb_size = kSuperblockSize;
  int coded_w = 0;
  int coded_h = 0;
};

// Gathers the reference line at offset `line` above/left of `rect` from the
// reconstruction, replicating at borders and keeping clear of regions the
// decoder has not produced yet.
RefSamples BuildRefSamples(const PlaneU8& recon, const Rect& rect, int line,
                           const RefContext& ctx);

// Per-sample prediction of a rect.w x rect.h block. Directional projection
// walks 1/32-pel steps; fractional positions use 2-tap bilinear filtering on
// line 0 and the 4-tap interpolation bank on lines 1-2.
Image<uint8_t> Predict(const IntraMode& mode, const RefSamples& refs,
                       const Rect& rect);

// The 4-tap interpolation bank: 16 phases indexed by frac32 >> 1, each row
// summing to 128. Generated from the DCT interpolation closed form.
const std::array<std::array<int, 4>, 16>& FourTapFilterBank();

// Modes available under adaptive mode coding: DC, Paeth and all nominal
// directions always; nonzero deltas only for nominal directions that appear
// in the neighbors, and only when both block dimensions are at least 8.
std::vector<IntraMode> AllowedIpmSet(std::optional<IntraMode> above_mode,
                                     std::optional<IntraMode> left_mode,
                                     int block_w, int block_h);

// Context for the chroma delta-angle symbol, derived from the co-located
// luma block: 0 when luma is non-directional or disagrees on the nominal
// direction, 1 when it agrees with delta 0, 2 when it agrees with a nonzero
// delta.
int ChromaDeltaContext(std::optional<IntraMode> colocated_luma,
                       int chroma_nominal);

}  // namespace bav1

#endif  // BAV1_INTRA_HPP_
