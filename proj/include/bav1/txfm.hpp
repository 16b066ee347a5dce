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

#ifndef BAV1_TXFM_HPP_
#define BAV1_TXFM_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "bav1/intra.hpp"
#include "bav1/plane.hpp"

namespace bav1 {

// Generalized graph Laplacian of an n-vertex path graph: edge weight w_e on
// every edge, self-loop weights v_e1/v_e2 on the first/last vertex.
struct GglSpec {
  int n = 4;
  double edge_weight = 1.0;      // w_e
  double self_loop_first = 0.0;  // v_e1
  double self_loop_last = 0.0;   // v_e2
};

// L = D - W + V; symmetric positive semidefinite and tridiagonal.
Eigen::MatrixXd GglMatrix(const GglSpec& spec);

// Rows are the eigenvectors of GglMatrix(spec), ordered by ascending
// eigenvalue, each sign-normalized so its first nonzero entry is positive.
Eigen::MatrixXd LgtBasis(const GglSpec& spec);

// Closed-form orthonormal bases (rows = basis vectors, ascending frequency).
Eigen::MatrixXd Dct2Basis(int n);
Eigen::MatrixXd Dst4Basis(int n);
Eigen::MatrixXd Dst7Basis(int n);

// Spatially reversed, sign-alternated counterpart: K'(k,j) = (-1)^k K(k,n-1-j).
Eigen::MatrixXd FlipBasis(const Eigen::MatrixXd& basis);

// Integer kernel at scale 128 (magnitudes up to 128, so stored in int16):
// plain rounding followed by greedy +-1 coordinate descent on
// ||T*T^t - 128^2 I||_F. Throws std::logic_error if the tuned kernel misses
// the 2% infinity-norm orthogonality bound.
Image<int16_t> QuantizeKernelInt8(const Eigen::MatrixXd& basis);

// ||T*T^t - 128^2 I||_inf / 128^2.
double GramDeviationInf(const Image<int16_t>& kernel);
// Squared Frobenius norm of T*T^t - 128^2 I.
double GramDeviationFrobSq(const Image<int16_t>& kernel);

enum class TxKernelType : uint8_t {
  kDct2,
  kAdst,
  kFlipAdst,
  kIdt,
  kLgt4,
  kLgt8,
  kLgt16,
};

struct TxKernel {
  int n = 0;
  TxKernelType type = TxKernelType::kDct2;
  Eigen::MatrixXd basis;       // orthonormal rows, ascending frequency
  Image<int16_t> quantized;    // 128-scaled, orthogonality-tuned
};

// Per-axis kernel selector, the unit the bitstream's joint tx type splits
// into.
enum class TxAxis : uint8_t { kDct2, kAdst, kFlipAdst, kIdt };

// Joint transform types signaled per block.
enum class TxType : uint8_t {
  kDctDct,
  kAdstAdst,
  kAdstDct,   // ADST vertical, DCT horizontal
  kDctAdst,
  kFlipFlip,
  kIdtIdt,
};
inline constexpr int kNumTxTypes = 6;

TxAxis TxTypeVertical(TxType t);
TxAxis TxTypeHorizontal(TxType t);

// All kernels for one EPT setting. The ADST slot maps to DST-VII (n=4) /
// DST-IV (n=8,16) when EPT is off and to the LGT family with self-loop
// weights 2w_e / 1.5w_e / w_e when EPT is on. DCT-2 and identity are shared.
// ADST-family kernels exist only for n <= 16.
class TxKernelSet {
 public:
  static const TxKernelSet& Get(bool ept_enabled);

  // n in {4, 8, 16, 32}. Throws std::invalid_argument for (ADST, 32).
  const TxKernel& Kernel(TxAxis axis, int n) const;

 private:
  explicit TxKernelSet(bool ept_enabled);
  TxKernel dct2_[4], adst_[3], flip_[3], idt_[4];
};

// Kernels for the two axes of a tx_w x tx_h unit under the given type.
std::pair<const TxKernel*, const TxKernel*> SelectPrimaryKernels(
    int tx_w, int tx_h, TxType type, bool ept_enabled);

// Integer transforms: column pass then row pass, round-half-up shifts of
// 2/12 per stage so the forward/inverse pipeline has unity net scale (the
// kernel scale 128^2 cancels against 2^14). Float versions are exact.
BlockI32 ForwardTx2dInt(const BlockI32& residual, const TxKernel& vertical,
                        const TxKernel& horizontal);
BlockI32 InverseTx2dInt(const BlockI32& coeffs, const TxKernel& vertical,
                        const TxKernel& horizontal);
Eigen::MatrixXd ForwardTx2dFloat(const Eigen::MatrixXd& residual,
                                 const TxKernel& vertical,
                                 const TxKernel& horizontal);
Eigen::MatrixXd InverseTx2dFloat(const Eigen::MatrixXd& coeffs,
                                 const TxKernel& vertical,
                                 const TxKernel& horizontal);

// (row, col) positions ordered by ascending anti-diagonal; even diagonals
// scan bottom-left to top-right, odd ones the other way.
std::vector<std::pair<int, int>> ZigZagOrder(int w, int h);

// --- Non-separable secondary transform ------------------------------------

inline constexpr int kNsdtInputSize = 16;
inline constexpr int kNsdtKernelScaleBits = 12;
inline constexpr int kNsdtNumModeClasses = 4;
inline constexpr int kNsdtNumSizeClasses = 2;
inline constexpr int kNsdtNumSets = 2;  // signaled index 1 or 2

struct NsdtKernel {
  Eigen::Matrix<double, kNsdtInputSize, kNsdtInputSize> basis;
  Eigen::Matrix<int16_t, kNsdtInputSize, kNsdtInputSize> quantized;
};

// 0 non-directional, 1 near-horizontal (157..203), 2 near-vertical (45..113),
// 3 diagonal (135). Classification uses the nominal angle only.
int NsdtModeClass(const IntraMode& mode);
int NsdtSizeClass(int tx_w, int tx_h);  // 0 for 4x4, 1 for >= 8x8
int NsdtContext(const IntraMode& mode, int tx_w, int tx_h);

// `set_index` is the signaled index in {1, 2}.
const NsdtKernel& NsdtKernelFor(int mode_class, int size_class, int set_index);

// Applies the secondary transform to the first 16 zig-zag-ordered
// coefficients of a tx_w x tx_h unit in place; everything else is untouched.
void NsdtForwardInt(BlockI32& coeffs, const NsdtKernel& kernel);
void NsdtInverseInt(BlockI32& coeffs, const NsdtKernel& kernel);
Eigen::VectorXd NsdtForwardFloat(const Eigen::VectorXd& v,
                                 const NsdtKernel& kernel);
Eigen::VectorXd NsdtInverseFloat(const Eigen::VectorXd& v,
                                 const NsdtKernel& kernel);

// Raw kernel tables (generated by `bav1 train-nsdt --emit-source`).
extern const double kNsdtKernelTable[kNsdtNumModeClasses][kNsdtNumSizeClasses]
                                    [kNsdtNumSets][kNsdtInputSize]
                                    [kNsdtInputSize];

}  // namespace bav1

#endif  // BAV1_TXFM_HPP_
