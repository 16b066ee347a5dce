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

#ifndef BAV1_PARTITION_HPP_
#define BAV1_PARTITION_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bav1/bitio.hpp"

namespace bav1 {

inline constexpr int kSuperblockSize = 64;  // luma pixels
inline constexpr int kMinBlockSize = 4;     // plane-local pixels
// Depth at which the recursion must bottom out (64 -> 4 is four splits).
inline constexpr int kMaxPartitionDepth = 4;
// Effective shared depth that covers any tree (chroma never signals).
inline constexpr int kFullySharedDepth = 8;

enum class PartitionType : uint8_t { kNone = 0, kSplit = 1, kHorz = 2, kVert = 3 };
inline constexpr int kNumPartitionTypes = 4;

enum class PlaneKind { kLuma, kChroma };

struct Rect {
  int x = 0, y = 0, w = 0, h = 0;
  bool Contains(int px, int py) const {
    return px >= x && px < x + w && py >= y && py < y + h;
  }
  bool operator==(const Rect&) const = default;
};

struct PartitionNode {
  Rect rect;
  PartitionType pattern = PartitionType::kNone;
  int depth = 0;
  std::vector<PartitionNode> children;
  bool IsLeaf() const { return children.empty(); }
};

// Child rectangles in coding order (Z order for kSplit, top/bottom for
// kHorz, left/right for kVert). kNone yields nothing.
std::vector<Rect> ChildRects(const Rect& rect, PartitionType pattern);

// Small value set of partition types.
struct PatternSet {
  uint8_t bits = 0;
  void Add(PartitionType p) { bits |= uint8_t{1} << static_cast<int>(p); }
  bool Contains(PartitionType p) const {
    return (bits >> static_cast<int>(p)) & 1;
  }
  int Count() const;
  bool operator==(const PatternSet&) const = default;
};

// The SDP pattern rule: a chroma node above the shared depth inherits the
// co-located luma pattern (capped to legality; an uninheritable pattern
// degrades to kNone); any other node gets every pattern whose children meet
// the 4-pixel minimum. Rects of signaled nodes are always square.
PatternSet LegalPatterns(const Rect& rect, PlaneKind plane, int depth,
                         int shared_depth,
                         std::optional<PartitionType> luma_pattern);

// Per-superblock luma + chroma trees. Chroma rects are in chroma pixels;
// depths count luma levels from the superblock root.
struct SdpTree {
  PartitionNode luma_root;
  PartitionNode chroma_root;
  int shared_depth = kFullySharedDepth;
};

// The luma leaf containing luma pixel (2*cx, 2*cy) for a chroma leaf whose
// top-left corner is (cx, cy).
const PartitionNode* ColocatedLumaLeaf(const PartitionNode& luma_root,
                                       const Rect& chroma_leaf);

// Plane-local coded extent; nodes straddling it are force-split without
// signaling, nodes fully outside are skipped.
struct TreeGeometry {
  int coded_w = 0;
  int coded_h = 0;
};

struct PartitionCdfs {
  std::array<Cdf, 4> luma{Cdf(4), Cdf(4), Cdf(4), Cdf(4)};
  std::array<Cdf, 3> chroma{Cdf(4), Cdf(4), Cdf(4)};
  Cdf& Luma(int depth) { return luma[std::min(depth, 3)]; }
  Cdf& Chroma(int depth) { return chroma[std::min(depth, 2)]; }
};

// Pattern symbols in pre-order; chroma patterns above shared_depth and all
// boundary-forced patterns are inferred, not coded.
void SerializeTree(const SdpTree& tree, RangeEncoder& enc, PartitionCdfs& cdfs,
                   const TreeGeometry& luma_geometry);

SdpTree ParseTree(RangeDecoder& dec, PartitionCdfs& cdfs, const Rect& sb_luma,
                  const TreeGeometry& luma_geometry, int shared_depth);

// Visits coded (inside-geometry) leaves in coding order.
void ForEachCodedLeaf(const PartitionNode& root, const TreeGeometry& geometry,
                      const std::function<void(const PartitionNode&)>& fn);

// True when the whole rect lies inside the coded extent.
bool RectInside(const Rect& rect, const TreeGeometry& geometry);
// True when no part of the rect lies inside.
bool RectOutside(const Rect& rect, const TreeGeometry& geometry);

}  // namespace bav1

#endif  // BAV1_PARTITION_HPP_
