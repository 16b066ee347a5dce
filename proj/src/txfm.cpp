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

#include "bav1/txfm.hpp"

#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace bav1 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kKernelScale = 128;

// Forward/inverse per-stage right shifts; 128^2 * 2^-14 = 1 net scale.
constexpr int kStage1Shift = 2;
constexpr int kStage2Shift = 12;

int32_t RoundShift(int64_t v, int shift) {
  return static_cast<int32_t>((v + (int64_t{1} << (shift - 1))) >> shift);
}

BlockI32 RoundShiftMat(const Eigen::Matrix<int64_t, Eigen::Dynamic,
                                           Eigen::Dynamic, Eigen::RowMajor>& m,
                       int shift) {
  BlockI32 out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(r, c) = RoundShift(m(r, c), shift);
    }
  }
  return out;
}

using MatI64 =
    Eigen::Matrix<int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace

Eigen::MatrixXd GglMatrix(const GglSpec& spec) {
  assert(spec.n >= 2 && spec.edge_weight > 0);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(spec.n, spec.n);
  for (int i = 0; i + 1 < spec.n; ++i) {
    l(i, i + 1) = -spec.edge_weight;
    l(i + 1, i) = -spec.edge_weight;
    l(i, i) += spec.edge_weight;
    l(i + 1, i + 1) += spec.edge_weight;
  }
  l(0, 0) += spec.self_loop_first;
  l(spec.n - 1, spec.n - 1) += spec.self_loop_last;
  return l;
}

namespace {

Eigen::MatrixXd SignNormalizeRows(Eigen::MatrixXd m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > 1e-9) {
        if (m(r, c) < 0) m.row(r) = -m.row(r);
        break;
      }
    }
  }
  return m;
}

}  // namespace

Eigen::MatrixXd LgtBasis(const GglSpec& spec) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(GglMatrix(spec));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed for GGL");
  }
  // Eigen orders eigenvalues ascending; eigenvectors are columns.
  return SignNormalizeRows(solver.eigenvectors().transpose());
}

Eigen::MatrixXd Dct2Basis(int n) {
  Eigen::MatrixXd m(n, n);
  for (int k = 0; k < n; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    for (int j = 0; j < n; ++j) {
      m(k, j) = scale * std::cos(kPi * k * (2 * j + 1) / (2 * n));
    }
  }
  return m;
}

Eigen::MatrixXd Dst4Basis(int n) {
  Eigen::MatrixXd m(n, n);
  const double scale = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      m(k, j) = scale * std::sin(kPi * (2 * k + 1) * (2 * j + 1) / (4 * n));
    }
  }
  return m;
}

Eigen::MatrixXd Dst7Basis(int n) {
  Eigen::MatrixXd m(n, n);
  const double scale = std::sqrt(4.0 / (2 * n + 1));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      m(k, j) = scale * std::sin(kPi * (2 * k + 1) * (j + 1) / (2 * n + 1));
    }
  }
  return m;
}

Eigen::MatrixXd FlipBasis(const Eigen::MatrixXd& basis) {
  Eigen::MatrixXd flipped = basis.rowwise().reverse();
  for (Eigen::Index k = 1; k < flipped.rows(); k += 2) {
    flipped.row(k) = -flipped.row(k);
  }
  return flipped;
}

double GramDeviationInf(const Image<int16_t>& kernel) {
  const int n = static_cast<int>(kernel.rows());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int64_t dot = 0;
      for (int k = 0; k < n; ++k) {
        dot += int64_t{kernel(i, k)} * kernel(j, k);
      }
      const int64_t want = (i == j) ? kKernelScale * kKernelScale : 0;
      worst = std::max(worst, static_cast<double>(std::abs(dot - want)));
    }
  }
  return worst / (kKernelScale * kKernelScale);
}

double GramDeviationFrobSq(const Image<int16_t>& kernel) {
  const int n = static_cast<int>(kernel.rows());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int64_t dot = 0;
      for (int k = 0; k < n; ++k) {
        dot += int64_t{kernel(i, k)} * kernel(j, k);
      }
      const int64_t want = (i == j) ? kKernelScale * kKernelScale : 0;
      const double d = static_cast<double>(dot - want);
      total += d * d;
    }
  }
  return total;
}

Image<int16_t> QuantizeKernelInt8(const Eigen::MatrixXd& basis) {
  const int n = static_cast<int>(basis.rows());
  Image<int16_t> t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t(i, j) = static_cast<int16_t>(std::lround(kKernelScale * basis(i, j)));
    }
  }

  // Gram matrix, maintained incrementally through the descent.
  MatI64 gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int64_t dot = 0;
      for (int k = 0; k < n; ++k) dot += int64_t{t(i, k)} * t(j, k);
      gram(i, j) = dot - (i == j ? kKernelScale * kKernelScale : 0);
    }
  }

  // Change in ||gram||_F^2 if t(i,j) moves by delta. Row i of the Gram
  // changes by delta*t(k,j) against every row k (and symmetrically), the
  // diagonal by 2*delta*t(i,j) + delta^2.
  const auto delta_cost = [&](int i, int j, int delta) -> double {
    double change = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      const double before = static_cast<double>(gram(i, k));
      const double after = before + delta * t(k, j);
      change += 2.0 * (after * after - before * before);
    }
    const double before = static_cast<double>(gram(i, i));
    const double after = before + 2.0 * delta * t(i, j) + delta * delta;
    change += after * after - before * before;
    return change;
  };
  const auto apply = [&](int i, int j, int delta) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      gram(i, k) += int64_t{delta} * t(k, j);
      gram(k, i) = gram(i, k);
    }
    gram(i, i) += 2 * int64_t{delta} * t(i, j) + delta * delta;
    t(i, j) = static_cast<int16_t>(t(i, j) + delta);
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int delta : {1, -1}) {
          const int next = t(i, j) + delta;
          if (next < -kKernelScale || next > kKernelScale) continue;
          if (delta_cost(i, j, delta) < 0.0) {
            apply(i, j, delta);
            improved = true;
            break;
          }
        }
      }
    }
  }

  if (GramDeviationInf(t) > 0.02) {
    throw std::logic_error("integer kernel misses the orthogonality bound");
  }
  return t;
}

TxAxis TxTypeVertical(TxType t) {
  switch (t) {
    case TxType::kDctDct: return TxAxis::kDct2;
    case TxType::kAdstAdst: return TxAxis::kAdst;
    case TxType::kAdstDct: return TxAxis::kAdst;
    case TxType::kDctAdst: return TxAxis::kDct2;
    case TxType::kFlipFlip: return TxAxis::kFlipAdst;
    case TxType::kIdtIdt: return TxAxis::kIdt;
  }
  return TxAxis::kDct2;
}

TxAxis TxTypeHorizontal(TxType t) {
  switch (t) {
    case TxType::kDctDct: return TxAxis::kDct2;
    case TxType::kAdstAdst: return TxAxis::kAdst;
    case TxType::kAdstDct: return TxAxis::kDct2;
    case TxType::kDctAdst: return TxAxis::kAdst;
    case TxType::kFlipFlip: return TxAxis::kFlipAdst;
    case TxType::kIdtIdt: return TxAxis::kIdt;
  }
  return TxAxis::kDct2;
}

namespace {

int SizeIndex(int n) {
  switch (n) {
    case 4: return 0;
    case 8: return 1;
    case 16: return 2;
    case 32: return 3;
  }
  throw std::invalid_argument("unsupported transform size");
}

TxKernel MakeKernel(int n, TxKernelType type, Eigen::MatrixXd basis) {
  TxKernel k;
  k.n = n;
  k.type = type;
  k.quantized = QuantizeKernelInt8(basis);
  k.basis = std::move(basis);
  return k;
}

// The EPT substitutions of the ADST slot, by transform length.
Eigen::MatrixXd AdstSlotBasis(int n, bool ept) {
  if (!ept) {
    return n == 4 ? Dst7Basis(4) : Dst4Basis(n);
  }
  const double self_loop = n == 4 ? 2.0 : (n == 8 ? 1.5 : 1.0);
  return LgtBasis({n, 1.0, self_loop, 0.0});
}

TxKernelType AdstSlotType(int n, bool ept) {
  if (!ept) return TxKernelType::kAdst;
  return n == 4 ? TxKernelType::kLgt4
                : (n == 8 ? TxKernelType::kLgt8 : TxKernelType::kLgt16);
}

}  // namespace

TxKernelSet::TxKernelSet(bool ept_enabled) {
  const int sizes[4] = {4, 8, 16, 32};
  for (int i = 0; i < 4; ++i) {
    const int n = sizes[i];
    dct2_[i] = MakeKernel(n, TxKernelType::kDct2, Dct2Basis(n));
    idt_[i] = MakeKernel(n, TxKernelType::kIdt,
                         Eigen::MatrixXd::Identity(n, n));
    if (n <= 16) {
      Eigen::MatrixXd adst = AdstSlotBasis(n, ept_enabled);
      flip_[i] = MakeKernel(n, TxKernelType::kFlipAdst, FlipBasis(adst));
      adst_[i] = MakeKernel(n, AdstSlotType(n, ept_enabled), std::move(adst));
    }
  }
}

const TxKernelSet& TxKernelSet::Get(bool ept_enabled) {
  static const TxKernelSet baseline(false);
  static const TxKernelSet ept(true);
  return ept_enabled ? ept : baseline;
}

const TxKernel& TxKernelSet::Kernel(TxAxis axis, int n) const {
  const int i = SizeIndex(n);
  switch (axis) {
    case TxAxis::kDct2: return dct2_[i];
    case TxAxis::kIdt: return idt_[i];
    case TxAxis::kAdst:
    case TxAxis::kFlipAdst:
      if (n > 16) {
        throw std::invalid_argument("ADST-family kernels stop at 16 points");
      }
      return axis == TxAxis::kAdst ? adst_[i] : flip_[i];
  }
  throw std::invalid_argument("unknown transform axis");
}

std::pair<const TxKernel*, const TxKernel*> SelectPrimaryKernels(
    int tx_w, int tx_h, TxType type, bool ept_enabled) {
  const TxKernelSet& set = TxKernelSet::Get(ept_enabled);
  const TxKernel& vertical = set.Kernel(TxTypeVertical(type), tx_h);
  const TxKernel& horizontal = set.Kernel(TxTypeHorizontal(type), tx_w);
  return {&vertical, &horizontal};
}

BlockI32 ForwardTx2dInt(const BlockI32& residual, const TxKernel& vertical,
                        const TxKernel& horizontal) {
  assert(residual.rows() == vertical.n && residual.cols() == horizontal.n);
  const MatI64 kv = vertical.quantized.cast<int64_t>();
  const MatI64 kh = horizontal.quantized.cast<int64_t>();
  const BlockI32 stage1 =
      RoundShiftMat(kv * residual.cast<int64_t>(), kStage1Shift);
  return RoundShiftMat(stage1.cast<int64_t>() * kh.transpose(), kStage2Shift);
}

BlockI32 InverseTx2dInt(const BlockI32& coeffs, const TxKernel& vertical,
                        const TxKernel& horizontal) {
  assert(coeffs.rows() == vertical.n && coeffs.cols() == horizontal.n);
  const MatI64 kv = vertical.quantized.cast<int64_t>();
  const MatI64 kh = horizontal.quantized.cast<int64_t>();
  const BlockI32 stage1 =
      RoundShiftMat(kv.transpose() * coeffs.cast<int64_t>(), kStage1Shift);
  return RoundShiftMat(stage1.cast<int64_t>() * kh, kStage2Shift);
}

Eigen::MatrixXd ForwardTx2dFloat(const Eigen::MatrixXd& residual,
                                 const TxKernel& vertical,
                                 const TxKernel& horizontal) {
  return vertical.basis * residual * horizontal.basis.transpose();
}

Eigen::MatrixXd InverseTx2dFloat(const Eigen::MatrixXd& coeffs,
                                 const TxKernel& vertical,
                                 const TxKernel& horizontal) {
  return vertical.basis.transpose() * coeffs * horizontal.basis;
}

std::vector<std::pair<int, int>> ZigZagOrder(int w, int h) {
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<size_t>(w) * h);
  for (int d = 0; d <= (w - 1) + (h - 1); ++d) {
    if (d % 2 == 0) {
      // Bottom-left to top-right.
      int row = std::min(d, h - 1);
      int col = d - row;
      while (row >= 0 && col < w) {
        order.emplace_back(row, col);
        --row;
        ++col;
      }
    } else {
      int col = std::min(d, w - 1);
      int row = d - col;
      while (col >= 0 && row < h) {
        order.emplace_back(row, col);
        ++row;
        --col;
      }
    }
  }
  return order;
}

int NsdtModeClass(const IntraMode& mode) {
  if (!mode.directional()) return 0;
  const int nominal = kNominalAngles[mode.nominal];
  if (nominal >= 157) return 1;
  if (nominal <= 113) return 2;
  return 3;  // 135
}

int NsdtSizeClass(int tx_w, int tx_h) {
  return (tx_w >= 8 && tx_h >= 8) ? 1 : 0;
}

int NsdtContext(const IntraMode& mode, int tx_w, int tx_h) {
  return NsdtModeClass(mode) * kNsdtNumSizeClasses + NsdtSizeClass(tx_w, tx_h);
}

namespace {

struct NsdtKernelStore {
  NsdtKernel kernels[kNsdtNumModeClasses][kNsdtNumSizeClasses][kNsdtNumSets];
  NsdtKernelStore() {
    for (int c = 0; c < kNsdtNumModeClasses; ++c) {
      for (int z = 0; z < kNsdtNumSizeClasses; ++z) {
        for (int s = 0; s < kNsdtNumSets; ++s) {
          NsdtKernel& k = kernels[c][z][s];
          for (int i = 0; i < kNsdtInputSize; ++i) {
            for (int j = 0; j < kNsdtInputSize; ++j) {
              const double v = kNsdtKernelTable[c][z][s][i][j];
              k.basis(i, j) = v;
              k.quantized(i, j) = static_cast<int16_t>(
                  std::lround(v * (1 << kNsdtKernelScaleBits)));
            }
          }
        }
      }
    }
  }
};

}  // namespace

const NsdtKernel& NsdtKernelFor(int mode_class, int size_class,
                                int set_index) {
  assert(set_index == 1 || set_index == 2);
  static const NsdtKernelStore store;
  return store.kernels[mode_class][size_class][set_index - 1];
}

namespace {

void NsdtApplyInt(BlockI32& coeffs, const NsdtKernel& kernel, bool inverse) {
  const int w = static_cast<int>(coeffs.cols());
  const int h = static_cast<int>(coeffs.rows());
  assert(w * h >= kNsdtInputSize);
  const auto order = ZigZagOrder(w, h);
  int64_t gathered[kNsdtInputSize];
  for (int i = 0; i < kNsdtInputSize; ++i) {
    gathered[i] = coeffs(order[i].first, order[i].second);
  }
  for (int i = 0; i < kNsdtInputSize; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < kNsdtInputSize; ++j) {
      const int16_t m = inverse ? kernel.quantized(j, i) : kernel.quantized(i, j);
      acc += int64_t{m} * gathered[j];
    }
    coeffs(order[i].first, order[i].second) =
        RoundShift(acc, kNsdtKernelScaleBits);
  }
}

}  // namespace

void NsdtForwardInt(BlockI32& coeffs, const NsdtKernel& kernel) {
  NsdtApplyInt(coeffs, kernel, false);
}

void NsdtInverseInt(BlockI32& coeffs, const NsdtKernel& kernel) {
  NsdtApplyInt(coeffs, kernel, true);
}

Eigen::VectorXd NsdtForwardFloat(const Eigen::VectorXd& v,
                                 const NsdtKernel& kernel) {
  return kernel.basis * v;
}

Eigen::VectorXd NsdtInverseFloat(const Eigen::VectorXd& v,
                                 const NsdtKernel& kernel) {
  return kernel.basis.transpose() * v;
}

}  // namespace bav1
