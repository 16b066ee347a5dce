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

#ifndef BAV1_QUANT_HPP_
#define BAV1_QUANT_HPP_

#include <cmath>
#include <cstdint>

namespace bav1 {

inline constexpr int kMinQp = 0;
inline constexpr int kMaxQp = 63;

// step = max(1, round(2^((qp+32)/12))); roughly 24..242 over the 23..63
// ladder. Non-normative mapping.
inline int QuantStep(int qp) {
  return std::max(1, static_cast<int>(std::lround(
                         std::exp2((qp + 32) / 12.0))));
}

struct QuantParams {
  int qp = 39;
  int step = QuantStep(39);
  double rounding_offset = 0.5;  // fraction of a step

  static QuantParams FromQp(int qp) { return {qp, QuantStep(qp), 0.5}; }
};

// level = sign(c) * floor(|c|/step + 1/2)
inline int32_t Quantize(int32_t coeff, const QuantParams& params) {
  const int64_t magnitude = std::abs(static_cast<int64_t>(coeff));
  const int64_t level = (2 * magnitude + params.step) / (2 * params.step);
  return static_cast<int32_t>(coeff < 0 ? -level : level);
}

inline int32_t Dequantize(int32_t level, const QuantParams& params) {
  return level * params.step;
}

}  // namespace bav1

#endif  // BAV1_QUANT_HPP_
