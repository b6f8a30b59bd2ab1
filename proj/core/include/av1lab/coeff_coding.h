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

#ifndef AV1LAB_COEFF_CODING_H_
#define AV1LAB_COEFF_CODING_H_

#include <vector>

#include "av1lab/entropy.h"
#include "av1lab/transform.h"

namespace av1lab {

// ---- Scan order -------------------------------------------------------------

enum class ScanKind : uint8_t { kZigZag, kColumn, kRow };

// Column scan for a 1-D vertical transform, row scan for a 1-D horizontal
// transform, zig-zag for 2-D transforms and the 2-D identity.
ScanKind ScanKindFor(TxKernel vertical, TxKernel horizontal);

// Permutation of raster indexes in scan order (always a bijection).
std::vector<uint16_t> BuildScanOrder(ScanKind kind, TxSize size);

// ---- Level decomposition ----------------------------------------------------

// |V| in [0,2] ends with the base-range symbol; [3,14] is covered by up to
// four low-range symbols; above that a high-range residual of |V|-14 is
// carried by an Exp-Golomb code.
constexpr int kBrSymbols = 4;       // {0, 1, 2, >2}
constexpr int kLrSymbols = 4;       // {0, 1, 2, >2}
constexpr int kMaxLrSteps = 4;
constexpr int kLevelCascadeCap = 14;

struct LevelSymbols {
  int br = 0;                  // 0..3 (3 means ">2")
  std::vector<int> lrs;        // each 0..3, at most kMaxLrSteps
  int32_t hr = 0;              // |V| - 14 when |V| > 14, else 0
  bool negative = false;
};

LevelSymbols DecomposeLevel(int32_t v);
int32_t ReassembleLevel(const LevelSymbols& s);

// ---- Neighborhood contexts --------------------------------------------------

constexpr int kBrContexts = 6;
constexpr int kLrContexts = 4;
constexpr int kDcSignContexts = 3;

// Sum of neighbor magnitudes over the kernel-dependent region (five
// right/below neighbors for 2-D scans, three along the transform direction
// for 1-D scans), halved and clamped into the context-bucket range.
// Out-of-block neighbors count as zero.
int BrContext(const Grid<int32_t>& levels, int x, int y, ScanKind kind);
int LrContext(const Grid<int32_t>& levels, int x, int y, ScanKind kind);

// ---- Transform-unit coefficient coding --------------------------------------

// Adaptive models for one plane type. Copying the struct is the model
// save/restore hook.
struct CoeffModels {
  CoeffModels();
  CdfModel eob_class;                 // 14 end-of-block position classes
  std::vector<CdfModel> br;           // base range, kBrContexts
  std::vector<CdfModel> br_last;      // base range at the last coefficient (M=3)
  std::vector<CdfModel> lr;           // low range, kLrContexts
  std::vector<CdfModel> dc_sign;      // kDcSignContexts binary models
};

// Codes one transform unit's quantized levels. The index of the last
// non-zero coefficient goes first, levels follow in reverse scan order, the
// DC sign is entropy coded with the above/left context and the AC sign bits
// are packed together as raw bits at the end.
void CoeffEncode(SymbolEncoder& enc, CoeffModels& models,
                 const Grid<int32_t>& levels, TxKernel vertical,
                 TxKernel horizontal, int dc_sign_context);

Grid<int32_t> CoeffDecode(SymbolDecoder& dec, CoeffModels& models, TxSize size,
                          TxKernel vertical, TxKernel horizontal,
                          int dc_sign_context);

}  // namespace av1lab

#endif  // AV1LAB_COEFF_CODING_H_
