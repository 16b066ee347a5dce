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

#include "bav1/intra.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace bav1 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Per-angle 1/32-pel projection steps. d_above = round(32*cot(angle)) drives
// the above-row position, d_left = round(32*tan(angle)) the left-column
// position; angle 90 and 180 reduce to exact copies.
struct AngleSteps {
  int d_above;
  int d_left;
};

AngleSteps StepsForAngle(int angle_deg) {
  const double rad = angle_deg * kPi / 180.0;
  AngleSteps s{0, 0};
  if (angle_deg != 90 && angle_deg < 180) {
    s.d_above = static_cast<int>(std::lround(32.0 / std::tan(rad)));
  }
  if (angle_deg != 180 && angle_deg > 90) {
    s.d_left = static_cast<int>(std::lround(32.0 * std::tan(rad)));
  }
  return s;
}

int RequiredAboveExtent(const Rect& r) { return r.w + 2 * r.h + 16; }
int RequiredLeftExtent(const Rect& r) { return r.h + 2 * r.w + 16; }

void FillRange(uint8_t* base, int from, int to, uint8_t value) {
  std::fill(base + from, base + to, value);
}

}  // namespace

RefSamples BuildRefSamples(const PlaneU8& recon, const Rect& rect, int line,
                           const RefContext& ctx) {
  assert(line >= 0 && line <= kMaxRefLine);
  RefSamples refs;
  refs.line = line;
  refs.have_above = rect.y > 0;
  refs.have_left = rect.x > 0;
  refs.above_count = std::min(RequiredAboveExtent(rect),
                              static_cast<int>(RefSamples::kMaxExtent));
  refs.left_count = std::min(RequiredLeftExtent(rect),
                             static_cast<int>(RefSamples::kMaxExtent));

  // Nearest decoded row/column when the exact line is off the plane.
  const int above_row = std::max(0, rect.y - 1 - line);
  const int left_col = std::max(0, rect.x - 1 - line);

  uint8_t corner = 128;
  if (refs.have_above && refs.have_left) {
    corner = recon(above_row, left_col);
  }

  if (refs.have_above) {
    // Samples right of the block are only trusted when the row lies above
    // the current superblock row (fully decoded); otherwise they replicate.
    const int avail_end =
        (above_row < ctx.sb_y) ? ctx.coded_w : std::min(rect.x + rect.w,
                                                        ctx.coded_w);
    uint8_t last = corner;
    for (int x = -1 - line; x < refs.above_count; ++x) {
      const int px = std::clamp(rect.x + x, 0, avail_end - 1);
      if (rect.x + x < avail_end) {
        last = recon(above_row, px);
      }
      if (x >= -1) refs.above[RefSamples::kPad + 1 + x] = last;
    }
    if (!refs.have_left) corner = refs.AboveAt(0);
  }
  if (refs.have_left) {
    const int avail_end = (left_col < ctx.sb_x)
                              ? std::min(ctx.sb_y + ctx.sb_size, ctx.coded_h)
                              : std::min(rect.y + rect.h, ctx.coded_h);
    uint8_t last = corner;
    for (int y = -1 - line; y < refs.left_count; ++y) {
      const int py = std::clamp(rect.y + y, 0, avail_end - 1);
      if (rect.y + y < avail_end) {
        last = recon(py, left_col);
      }
      if (y >= -1) refs.left[RefSamples::kPad + 1 + y] = last;
    }
    if (!refs.have_above) corner = refs.LeftAt(0);
  }

  if (!refs.have_above) {
    const uint8_t fill = refs.have_left ? refs.LeftAt(0) : uint8_t{128};
    FillRange(refs.above.data(), RefSamples::kPad,
              RefSamples::kPad + 1 + refs.above_count, fill);
  }
  if (!refs.have_left) {
    const uint8_t fill = refs.have_above ? refs.AboveAt(0) : uint8_t{128};
    FillRange(refs.left.data(), RefSamples::kPad,
              RefSamples::kPad + 1 + refs.left_count, fill);
  }

  // Corner and pad regions replicate toward the arrays' interiors.
  refs.above[RefSamples::kPad] = corner;
  refs.left[RefSamples::kPad] = corner;
  FillRange(refs.above.data(), 0, RefSamples::kPad, refs.above[RefSamples::kPad]);
  FillRange(refs.left.data(), 0, RefSamples::kPad, refs.left[RefSamples::kPad]);
  FillRange(refs.above.data(), RefSamples::kPad + 1 + refs.above_count,
            static_cast<int>(refs.above.size()),
            refs.above[RefSamples::kPad + refs.above_count]);
  FillRange(refs.left.data(), RefSamples::kPad + 1 + refs.left_count,
            static_cast<int>(refs.left.size()),
            refs.left[RefSamples::kPad + refs.left_count]);
  return refs;
}

const std::array<std::array<int, 4>, 16>& FourTapFilterBank() {
  static const std::array<std::array<int, 4>, 16> bank = [] {
    std::array<std::array<int, 4>, 16> filters{};
    for (int phase = 0; phase < 16; ++phase) {
      const double alpha = (2.0 * phase) / 32.0;  // fractional offset
      const double t = 1.0 + alpha;  // evaluation point over taps {0,1,2,3}
      std::array<double, 4> taps{};
      for (int j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) {
          const double wk = (k == 0) ? 1.0 : 2.0;
          acc += wk * std::cos(kPi * k * (2 * j + 1) / 8.0) *
                 std::cos(kPi * k * (2 * t + 1) / 8.0);
        }
        taps[j] = acc / 4.0;
      }
      int sum = 0;
      int largest = 0;
      for (int j = 0; j < 4; ++j) {
        filters[phase][j] = static_cast<int>(std::lround(128.0 * taps[j]));
        sum += filters[phase][j];
        if (std::abs(filters[phase][j]) > std::abs(filters[phase][largest])) {
          largest = j;
        }
      }
      filters[phase][largest] += 128 - sum;  // exact unity gain
    }
    return filters;
  }();
  return bank;
}

namespace {

uint8_t InterpolateRef(const uint8_t* base, int pos32, int line) {
  const int idx = pos32 >> 5;
  const int frac = pos32 & 31;
  // base points at logical index 0 (kPad + 1 into the array).
  if (line == 0) {
    const int a = base[idx];
    const int b = base[idx + 1];
    return static_cast<uint8_t>(((32 - frac) * a + frac * b + 16) >> 5);
  }
  const auto& taps = FourTapFilterBank()[frac >> 1];
  const int v = taps[0] * base[idx - 1] + taps[1] * base[idx] +
                taps[2] * base[idx + 1] + taps[3] * base[idx + 2];
  return ClampPixel<uint8_t>((v + 64) >> 7);
}

Image<uint8_t> PredictDc(const RefSamples& refs, int w, int h) {
  int sum = 0;
  int count = 0;
  if (refs.have_above) {
    for (int x = 0; x < w; ++x) sum += refs.AboveAt(x);
    count += w;
  }
  if (refs.have_left) {
    for (int y = 0; y < h; ++y) sum += refs.LeftAt(y);
    count += h;
  }
  const uint8_t dc =
      count == 0 ? uint8_t{128}
                 : static_cast<uint8_t>((sum + count / 2) / count);
  return Image<uint8_t>::Constant(h, w, dc);
}

Image<uint8_t> PredictPaeth(const RefSamples& refs, int w, int h) {
  Image<uint8_t> out(h, w);
  const int tl = refs.Corner();
  for (int r = 0; r < h; ++r) {
    const int left = refs.LeftAt(r);
    for (int c = 0; c < w; ++c) {
      const int top = refs.AboveAt(c);
      const int base = left + top - tl;
      const int dl = std::abs(base - left);
      const int dt = std::abs(base - top);
      const int dtl = std::abs(base - tl);
      int v;
      if (dl <= dt && dl <= dtl) {
        v = left;
      } else if (dt <= dtl) {
        v = top;
      } else {
        v = tl;
      }
      out(r, c) = static_cast<uint8_t>(v);
    }
  }
  return out;
}

Image<uint8_t> PredictDirectional(const RefSamples& refs, int w, int h,
                                  int angle) {
  const AngleSteps steps = StepsForAngle(angle);
  const int line = refs.line;
  const uint8_t* above0 = refs.above.data() + RefSamples::kPad + 1;
  const uint8_t* left0 = refs.left.data() + RefSamples::kPad + 1;
  const int above_floor = -32 * (1 + line);

  Image<uint8_t> out(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (angle <= 90) {
        const int p32 = (c << 5) + (r + 1 + line) * steps.d_above;
        out(r, c) = InterpolateRef(above0, p32, line);
      } else if (angle >= 180) {
        const int q32 = (r << 5) + (c + 1 + line) * steps.d_left;
        out(r, c) = InterpolateRef(left0, q32, line);
      } else {
        const int p32 = (c << 5) + (r + 1 + line) * steps.d_above;
        if (p32 >= above_floor) {
          out(r, c) = InterpolateRef(above0, p32, line);
        } else {
          const int q32 = (r << 5) + (c + 1 + line) * steps.d_left;
          out(r, c) = InterpolateRef(left0, q32, line);
        }
      }
    }
  }
  return out;
}

}  // namespace

Image<uint8_t> Predict(const IntraMode& mode, const RefSamples& refs,
                       const Rect& rect) {
  switch (mode.kind) {
    case IntraModeKind::kDc:
      return PredictDc(refs, rect.w, rect.h);
    case IntraModeKind::kPaeth:
      return PredictPaeth(refs, rect.w, rect.h);
    case IntraModeKind::kDirectional:
      return PredictDirectional(refs, rect.w, rect.h, mode.angle());
  }
  return {};
}

std::vector<IntraMode> AllowedIpmSet(std::optional<IntraMode> above_mode,
                                     std::optional<IntraMode> left_mode,
                                     int block_w, int block_h) {
  std::vector<IntraMode> set;
  set.reserve(2 + 8 + 12);
  set.push_back(IntraMode::Dc());
  set.push_back(IntraMode::Paeth());
  for (int n = 0; n < 8; ++n) set.push_back(IntraMode::Directional(n));
  if (block_w < 8 || block_h < 8) return set;
  for (int n = 0; n < 8; ++n) {
    const bool neighbor_uses =
        (above_mode && above_mode->directional() && above_mode->nominal == n) ||
        (left_mode && left_mode->directional() && left_mode->nominal == n);
    if (!neighbor_uses) continue;
    for (int delta : kDeltaSteps) {
      set.push_back(IntraMode::Directional(n, delta));
    }
  }
  return set;
}

int ChromaDeltaContext(std::optional<IntraMode> colocated_luma,
                       int chroma_nominal) {
  if (!colocated_luma || !colocated_luma->directional()) return 0;
  if (colocated_luma->nominal != chroma_nominal) return 0;
  return colocated_luma->delta == 0 ? 1 : 2;
}

}  // namespace bav1
