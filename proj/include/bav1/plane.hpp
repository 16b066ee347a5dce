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

#ifndef BAV1_PLANE_HPP_
#define BAV1_PLANE_HPP_

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>

namespace bav1 {

// Row-major dense sample plane; Image(y, x) addresses row y, column x.
template <typename T>
using Image = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using PlaneU8 = Image<uint8_t>;
using BlockI32 = Image<int32_t>;

template <typename T>
inline T ClampPixel(int64_t v) {
  return static_cast<T>(std::clamp<int64_t>(v, 0, 255));
}

// Border-replicated sample access.
template <typename T>
inline T SampleClamped(const Image<T>& plane, int x, int y) {
  x = std::clamp(x, 0, static_cast<int>(plane.cols()) - 1);
  y = std::clamp(y, 0, static_cast<int>(plane.rows()) - 1);
  return plane(y, x);
}

// Replicate-pads `plane` on the right/bottom to `width` x `height`.
template <typename T>
Image<T> PadToSize(const Image<T>& plane, int width, int height) {
  Image<T> out(height, width);
  const int src_w = static_cast<int>(plane.cols());
  const int src_h = static_cast<int>(plane.rows());
  for (int y = 0; y < height; ++y) {
    const int sy = std::min(y, src_h - 1);
    for (int x = 0; x < width; ++x) {
      out(y, x) = plane(sy, std::min(x, src_w - 1));
    }
  }
  return out;
}

// An 8-bit YCbCr 4:2:0 frame: full-resolution luma, half-resolution (rounded
// up) chroma.
struct Frame {
  int width = 0;   // luma pixels
  int height = 0;  // luma pixels
  PlaneU8 y;
  PlaneU8 cb;
  PlaneU8 cr;

  static int ChromaWidth(int luma_width) { return (luma_width + 1) / 2; }
  static int ChromaHeight(int luma_height) { return (luma_height + 1) / 2; }

  static Frame Allocate(int width, int height, uint8_t fill = 128) {
    Frame f;
    f.width = width;
    f.height = height;
    f.y = PlaneU8::Constant(height, width, fill);
    f.cb = PlaneU8::Constant(ChromaHeight(height), ChromaWidth(width), fill);
    f.cr = PlaneU8::Constant(ChromaHeight(height), ChromaWidth(width), fill);
    return f;
  }

  bool SameGeometry(const Frame& other) const {
    return width == other.width && height == other.height;
  }
};

inline bool operator==(const Frame& a, const Frame& b) {
  return a.width == b.width && a.height == b.height && a.y == b.y &&
         a.cb == b.cb && a.cr == b.cr;
}

}  // namespace bav1

#endif  // BAV1_PLANE_HPP_
