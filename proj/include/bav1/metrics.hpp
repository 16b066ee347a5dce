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

#ifndef BAV1_METRICS_HPP_
#define BAV1_METRICS_HPP_

#include "bav1/plane.hpp"

namespace bav1 {

// Zero-MSE planes report this cap instead of infinity so BD-rate fits stay
// finite.
inline constexpr double kPsnrCap = 100.0;

// 10*log10(255^2 / MSE), capped at kPsnrCap. Throws std::invalid_argument on
// dimension mismatch.
double Psnr(const PlaneU8& ref, const PlaneU8& test);

// Mean SSIM over non-overlapping 8x8 windows (no Gaussian weighting),
// C1 = (0.01*255)^2, C2 = (0.03*255)^2, population moments. Requires both
// dimensions >= 8.
double Ssim(const PlaneU8& ref, const PlaneU8& test);

// The 6/8-1/8-1/8 luma/Cb/Cr weighting applied to any per-plane metric.
inline double OverallScore(double y, double cb, double cr) {
  return (6.0 * y + cb + cr) / 8.0;
}

struct QualityScore {
  double psnr_y = 0, psnr_cb = 0, psnr_cr = 0;
  double ssim_y = 0, ssim_cb = 0, ssim_cr = 0;
  double overall_psnr = 0;
  double overall_ssim = 0;
};

QualityScore ScoreFrames(const Frame& ref, const Frame& test);

double SseBetween(const PlaneU8& a, const PlaneU8& b);

}  // namespace bav1

#endif  // BAV1_METRICS_HPP_
