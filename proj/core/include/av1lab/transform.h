// Copyright 2025 The av1lab Authors
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

#ifndef AV1LAB_TRANSFORM_H_
#define AV1LAB_TRANSFORM_H_

#include <span>
#include <vector>

#include "av1lab/block.h"
#include "av1lab/common.h"

namespace av1lab {

// 1-D kernels. ADST is the butterfly-friendly sine family (DST-IV) for
// N >= 8 and the classic DST-VII for N = 4; FLIPADST applies ADST to the
// reversed sample order; IDTX passes samples through.
enum class TxKernel : uint8_t { kDct, kAdst, kFlipAdst, kIdentity };

constexpr int kMinTxDim = 4;
constexpr int kMaxTxDim = 64;

struct TxSize {
  int width = 0;
  int height = 0;
  constexpr bool operator==(const TxSize&) const = default;
  constexpr int area() const { return width * height; }
};

constexpr bool IsValidTxDim(int d) {
  return d >= kMinTxDim && d <= kMaxTxDim && (d & (d - 1)) == 0;
}
constexpr bool IsValidTxSize(TxSize t) {
  if (!IsValidTxDim(t.width) || !IsValidTxDim(t.height)) return false;
  const int ratio = t.width > t.height ? t.width / t.height : t.height / t.width;
  return ratio == 1 || ratio == 2 || ratio == 4;
}

// ADST/FLIPADST are unavailable at dimension 32 and above.
constexpr bool KernelAllowed(TxKernel k, int n) {
  if (!IsValidTxDim(n)) return false;
  if (k == TxKernel::kAdst || k == TxKernel::kFlipAdst) return n < 32;
  return true;
}
constexpr bool KernelPairAllowed(TxKernel vertical, TxKernel horizontal,
                                 TxSize size) {
  return IsValidTxSize(size) && KernelAllowed(vertical, size.height) &&
         KernelAllowed(horizontal, size.width);
}

// Floating-point orthonormal basis, the design oracle for the integer
// kernels: row k dotted with the input gives coefficient k. Throws
// std::invalid_argument for an illegal kind/size combination.
Grid<double> KernelBasis(TxKernel kind, int n);

struct TxStats {
  int64_t multiplies = 0;
};

// Integer 1-D transforms with 12-bit trigonometric constants. Relative to
// the orthonormal basis the sinusoidal kernels carry a uniform gain of
// sqrt(N/2); the identity kernel has gain 1 (so identity x identity is an
// exact integer identity and backs the lossless path). Inverse1D is the
// plain transpose; the 2-D wrappers remove the squared gain.
void ForwardTransform1D(TxKernel k, std::span<int32_t> data,
                        TxStats* stats = nullptr);
void InverseTransform1D(TxKernel k, std::span<int32_t> data,
                        TxStats* stats = nullptr);

// Separable 2-D transform: column (vertical kernel) pass first, then rows.
// Output scale is the product of the two 1-D gains. Throws on illegal
// kernel/size combinations.
Grid<int32_t> TxForward(const Grid<int32_t>& residual, TxKernel vertical,
                        TxKernel horizontal, TxStats* stats = nullptr);
Grid<int32_t> TxInverse(const Grid<int32_t>& coeff, TxKernel vertical,
                        TxKernel horizontal, TxStats* stats = nullptr);

// ---- Transform block partitioning ------------------------------------------

// Initial transform size for a coding block: matches the block, capped at
// 64x64 (keeping the block's shape).
TxSize TxInitialSize(BlockSize block);

// The sub-sizes one split level produces: squares quarter into four halves,
// 2:1 rectangles split into two squares, 4:1 into two 2:1 halves. Empty when
// the size cannot split further.
std::vector<TxSize> TxSubSizes(TxSize size);

enum class PredictionClass : uint8_t { kIntra, kInter };

struct TxPartitionOptions {
  TxSize initial;
  // Inter blocks may split recursively (up to max_levels); intra blocks pick
  // one uniform size from `uniform_sizes`.
  bool recursive = false;
  int max_levels = 2;
  std::vector<TxSize> uniform_sizes;
};

TxPartitionOptions TxPartitionOptionsFor(BlockSize block, PredictionClass mode);

// Chroma transform blocks use the largest available size for the subsampled
// block dimensions.
TxSize ChromaTxSize(BlockSize luma_block, int subsampling_x, int subsampling_y);

}  // namespace av1lab

#endif  // AV1LAB_TRANSFORM_H_
