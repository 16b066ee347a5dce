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

#include "bav1/partition.hpp"

#include <bit>
#include <cassert>

namespace bav1 {

namespace {

bool PatternFits(const Rect& rect, PartitionType pattern) {
  switch (pattern) {
    case PartitionType::kNone:
      return true;
    case PartitionType::kSplit:
      return rect.w == rect.h && rect.w >= 2 * kMinBlockSize;
    case PartitionType::kHorz:
      return rect.h >= 2 * kMinBlockSize;
    case PartitionType::kVert:
      return rect.w >= 2 * kMinBlockSize;
  }
  return false;
}

}  // namespace

int PatternSet::Count() const { return std::popcount(bits); }

std::vector<Rect> ChildRects(const Rect& r, PartitionType pattern) {
  switch (pattern) {
    case PartitionType::kNone:
      return {};
    case PartitionType::kSplit: {
      const int hw = r.w / 2, hh = r.h / 2;
      return {{r.x, r.y, hw, hh},
              {r.x + hw, r.y, hw, hh},
              {r.x, r.y + hh, hw, hh},
              {r.x + hw, r.y + hh, hw, hh}};
    }
    case PartitionType::kHorz: {
      const int hh = r.h / 2;
      return {{r.x, r.y, r.w, hh}, {r.x, r.y + hh, r.w, hh}};
    }
    case PartitionType::kVert: {
      const int hw = r.w / 2;
      return {{r.x, r.y, hw, r.h}, {r.x + hw, r.y, hw, r.h}};
    }
  }
  return {};
}

PatternSet LegalPatterns(const Rect& rect, PlaneKind plane, int depth,
                         int shared_depth,
                         std::optional<PartitionType> luma_pattern) {
  PatternSet set;
  if (plane == PlaneKind::kChroma && depth < shared_depth) {
    assert(luma_pattern.has_value());
    const PartitionType inherited = PatternFits(rect, *luma_pattern)
                                        ? *luma_pattern
                                        : PartitionType::kNone;
    set.Add(inherited);
    return set;
  }
  for (PartitionType p : {PartitionType::kNone, PartitionType::kSplit,
                          PartitionType::kHorz, PartitionType::kVert}) {
    if (PatternFits(rect, p)) set.Add(p);
  }
  return set;
}

const PartitionNode* ColocatedLumaLeaf(const PartitionNode& luma_root,
                                       const Rect& chroma_leaf) {
  const int lx = 2 * chroma_leaf.x;
  const int ly = 2 * chroma_leaf.y;
  const PartitionNode* node = &luma_root;
  assert(node->rect.Contains(lx, ly));
  while (!node->IsLeaf()) {
    const PartitionNode* next = nullptr;
    for (const PartitionNode& child : node->children) {
      if (child.rect.Contains(lx, ly)) {
        next = &child;
        break;
      }
    }
    assert(next != nullptr);
    node = next;
  }
  return node;
}

bool RectInside(const Rect& rect, const TreeGeometry& g) {
  return rect.x + rect.w <= g.coded_w && rect.y + rect.h <= g.coded_h;
}

bool RectOutside(const Rect& rect, const TreeGeometry& g) {
  return rect.x >= g.coded_w || rect.y >= g.coded_h;
}

void ForEachCodedLeaf(const PartitionNode& root, const TreeGeometry& geometry,
                      const std::function<void(const PartitionNode&)>& fn) {
  if (RectOutside(root.rect, geometry)) return;
  if (root.IsLeaf()) {
    assert(RectInside(root.rect, geometry));
    fn(root);
    return;
  }
  for (const PartitionNode& child : root.children) {
    ForEachCodedLeaf(child, geometry, fn);
  }
}

namespace {

void SerializeLuma(const PartitionNode& node, RangeEncoder& enc,
                   PartitionCdfs& cdfs, const TreeGeometry& g) {
  if (RectOutside(node.rect, g)) return;
  if (!RectInside(node.rect, g)) {
    // Boundary-forced split; nothing coded.
    assert(node.pattern == PartitionType::kSplit);
  } else {
    const PatternSet legal = LegalPatterns(node.rect, PlaneKind::kLuma,
                                           node.depth, 0, std::nullopt);
    assert(legal.Contains(node.pattern));
    if (legal.Count() > 1) {
      enc.EncodeSymbol(cdfs.Luma(node.depth), static_cast<int>(node.pattern));
    }
  }
  if (node.pattern == PartitionType::kSplit) {
    for (const PartitionNode& child : node.children) {
      SerializeLuma(child, enc, cdfs, g);
    }
  }
}

PartitionNode ParseLuma(RangeDecoder& dec, PartitionCdfs& cdfs,
                        const Rect& rect, int depth, const TreeGeometry& g) {
  PartitionNode node;
  node.rect = rect;
  node.depth = depth;
  if (RectOutside(rect, g)) return node;
  if (!RectInside(rect, g)) {
    node.pattern = PartitionType::kSplit;
  } else {
    const PatternSet legal =
        LegalPatterns(rect, PlaneKind::kLuma, depth, 0, std::nullopt);
    if (legal.Count() > 1) {
      const int symbol = dec.DecodeSymbol(cdfs.Luma(depth));
      node.pattern = static_cast<PartitionType>(symbol);
      if (!legal.Contains(node.pattern)) {
        throw DecodeError("illegal luma partition pattern",
                          dec.byte_position());
      }
    } else {
      node.pattern = PartitionType::kNone;
    }
  }
  if (node.pattern == PartitionType::kSplit) {
    for (const Rect& child : ChildRects(rect, node.pattern)) {
      node.children.push_back(ParseLuma(dec, cdfs, child, depth + 1, g));
    }
  } else {
    for (const Rect& child : ChildRects(rect, node.pattern)) {
      PartitionNode leaf;
      leaf.rect = child;
      leaf.depth = depth + 1;
      node.children.push_back(std::move(leaf));
    }
  }
  return node;
}

// Chroma geometry is half the luma geometry in each direction.
TreeGeometry ChromaGeometry(const TreeGeometry& luma) {
  return {luma.coded_w / 2, luma.coded_h / 2};
}

void SerializeChroma(const PartitionNode& node, RangeEncoder& enc,
                     PartitionCdfs& cdfs, const TreeGeometry& g,
                     int shared_depth) {
  if (RectOutside(node.rect, g)) return;
  const bool inherited = node.depth < shared_depth;
  if (!RectInside(node.rect, g)) {
    assert(node.pattern == PartitionType::kSplit);
  } else if (!inherited) {
    const PatternSet legal = LegalPatterns(node.rect, PlaneKind::kChroma,
                                           node.depth, 0, std::nullopt);
    assert(legal.Contains(node.pattern));
    if (legal.Count() > 1) {
      enc.EncodeSymbol(cdfs.Chroma(node.depth),
                       static_cast<int>(node.pattern));
    }
  }
  if (node.pattern == PartitionType::kSplit) {
    for (const PartitionNode& child : node.children) {
      SerializeChroma(child, enc, cdfs, g, shared_depth);
    }
  }
}

PartitionNode ParseChroma(RangeDecoder& dec, PartitionCdfs& cdfs,
                          const Rect& rect, int depth, const TreeGeometry& g,
                          int shared_depth, const PartitionNode* luma_node) {
  PartitionNode node;
  node.rect = rect;
  node.depth = depth;
  if (RectOutside(rect, g)) return node;
  if (!RectInside(rect, g)) {
    node.pattern = PartitionType::kSplit;
  } else if (depth < shared_depth) {
    assert(luma_node != nullptr);
    const PatternSet legal = LegalPatterns(rect, PlaneKind::kChroma, depth,
                                           shared_depth, luma_node->pattern);
    assert(legal.Count() == 1);
    for (PartitionType p : {PartitionType::kNone, PartitionType::kSplit,
                            PartitionType::kHorz, PartitionType::kVert}) {
      if (legal.Contains(p)) node.pattern = p;
    }
  } else {
    const PatternSet legal =
        LegalPatterns(rect, PlaneKind::kChroma, depth, 0, std::nullopt);
    if (legal.Count() > 1) {
      const int symbol = dec.DecodeSymbol(cdfs.Chroma(depth));
      node.pattern = static_cast<PartitionType>(symbol);
      if (!legal.Contains(node.pattern)) {
        throw DecodeError("illegal chroma partition pattern",
                          dec.byte_position());
      }
    } else {
      node.pattern = PartitionType::kNone;
    }
  }
  const auto child_rects = ChildRects(rect, node.pattern);
  for (size_t i = 0; i < child_rects.size(); ++i) {
    if (node.pattern == PartitionType::kSplit) {
      const PartitionNode* luma_child =
          (luma_node != nullptr && depth + 1 <= shared_depth &&
           !luma_node->children.empty())
              ? &luma_node->children[i]
              : nullptr;
      node.children.push_back(ParseChroma(dec, cdfs, child_rects[i], depth + 1,
                                          g, shared_depth, luma_child));
    } else {
      PartitionNode leaf;
      leaf.rect = child_rects[i];
      leaf.depth = depth + 1;
      node.children.push_back(std::move(leaf));
    }
  }
  return node;
}

}  // namespace

void SerializeTree(const SdpTree& tree, RangeEncoder& enc, PartitionCdfs& cdfs,
                   const TreeGeometry& luma_geometry) {
  SerializeLuma(tree.luma_root, enc, cdfs, luma_geometry);
  SerializeChroma(tree.chroma_root, enc, cdfs, ChromaGeometry(luma_geometry),
                  tree.shared_depth);
}

SdpTree ParseTree(RangeDecoder& dec, PartitionCdfs& cdfs, const Rect& sb_luma,
                  const TreeGeometry& luma_geometry, int shared_depth) {
  SdpTree tree;
  tree.shared_depth = shared_depth;
  tree.luma_root = ParseLuma(dec, cdfs, sb_luma, 0, luma_geometry);
  const Rect sb_chroma{sb_luma.x / 2, sb_luma.y / 2, sb_luma.w / 2,
                       sb_luma.h / 2};
  tree.chroma_root =
      ParseChroma(dec, cdfs, sb_chroma, 0, ChromaGeometry(luma_geometry),
                  shared_depth, &tree.luma_root);
  return tree;
}

}  // namespace bav1
