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

#include "bav1/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace bav1 {

namespace {

void RequireSameShape(const PlaneU8& a, const PlaneU8& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("plane dimension mismatch");
  }
}

}  // namespace

double SseBetween(const PlaneU8& a, const PlaneU8& b) {
  RequireSameShape(a, b);
  return (a.cast<double>() - b.cast<double>()).squaredNorm();
}

double Psnr(const PlaneU8& ref, const PlaneU8& test) {
  RequireSameShape(ref, test);
  const double mse = SseBetween(ref, test) / static_cast<double>(ref.size());
  if (mse == 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(255.0 * 255.0 / mse));
}

double Ssim(const PlaneU8& ref, const PlaneU8& test) {
  RequireSameShape(ref, test);
  if (ref.rows() < 8 || ref.cols() < 8) {
    throw std::invalid_argument("SSIM requires planes of at least 8x8");
  }
  constexpr double kC1 = (0.01 * 255) * (0.01 * 255);
  constexpr double kC2 = (0.03 * 255) * (0.03 * 255);
  constexpr int kWin = 8;
  constexpr double kN = kWin * kWin;

  const int wy = static_cast<int>(ref.rows()) / kWin;
  const int wx = static_cast<int>(ref.cols()) / kWin;
  double total = 0.0;
  for (int by = 0; by < wy; ++by) {
    for (int bx = 0; bx < wx; ++bx) {
      const auto a = ref.block(by * kWin, bx * kWin, kWin, kWin)
                         .cast<double>()
                         .eval();
      const auto b = test.block(by * kWin, bx * kWin, kWin, kWin)
                         .cast<double>()
                         .eval();
      const double mu_a = a.mean();
      const double mu_b = b.mean();
      const double var_a = a.squaredNorm() / kN - mu_a * mu_a;
      const double var_b = b.squaredNorm() / kN - mu_b * mu_b;
      const double cov = a.cwiseProduct(b).sum() / kN - mu_a * mu_b;
      const double num = (2 * mu_a * mu_b + kC1) * (2 * cov + kC2);
      const double den =
          (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
      total += num / den;
    }
  }
  return total / (static_cast<double>(wy) * wx);
}

QualityScore ScoreFrames(const Frame& ref, const Frame& test) {
  if (!ref.SameGeometry(test)) {
    throw std::invalid_argument("frame dimension mismatch");
  }
  QualityScore q;
  q.psnr_y = Psnr(ref.y, test.y);
  q.psnr_cb = Psnr(ref.cb, test.cb);
  q.psnr_cr = Psnr(ref.cr, test.cr);
  q.ssim_y = Ssim(ref.y, test.y);
  q.ssim_cb = Ssim(ref.cb, test.cb);
  q.ssim_cr = Ssim(ref.cr, test.cr);
  q.overall_psnr = OverallScore(q.psnr_y, q.psnr_cb, q.psnr_cr);
  q.overall_ssim = OverallScore(q.ssim_y, q.ssim_cb, q.ssim_cr);
  return q;
}

}  // namespace bav1
