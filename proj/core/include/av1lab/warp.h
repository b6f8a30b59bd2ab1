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

#ifndef AV1LAB_WARP_H_
#define AV1LAB_WARP_H_

#include <optional>
#include <span>

#include "av1lab/block.h"
#include "av1lab/frame.h"
#include "av1lab/interp.h"

namespace av1lab {

constexpr int kWarpParamBits = 12;           // Q12 non-translational params
constexpr int kWarpParamOne = 1 << kWarpParamBits;
constexpr int kWarpPhases = 64;              // 1/64-pel interpolation
// The warp filter covers offsets in [-1, +2] pixels around the nominal tap
// anchor, so the per-pixel offset deviation allowed by the validity
// constraints stays inside a fixed 15x15 source window per 8x8 unit.
constexpr int kWarpFilterRows = 3 * kWarpPhases + 1;

// x' = (h11 x + h12 y)/4096 + tx/64, y' = (h21 x + h22 y)/4096 + ty/64.
struct AffineModel {
  int32_t h11 = kWarpParamOne;  // Q12
  int32_t h12 = 0;              // Q12
  int32_t h21 = 0;              // Q12
  int32_t h22 = kWarpParamOne;  // Q12
  int32_t tx_q64 = 0;           // translation, 1/64 pel
  int32_t ty_q64 = 0;
};

struct ShearParams {
  int32_t alpha = 0;  // Q12: h11 - 1
  int32_t beta = 0;   // Q12: h12
  int32_t gamma = 0;  // Q12: h21 / h11 (16-bit reciprocal division)
  int32_t delta = 0;  // Q12: h22 - gamma * h12 - 1
};

// Validity: 4|alpha| + 7|beta| < 1 and 4|gamma| + 4|delta| < 1.
bool ShearValid(const ShearParams& p);

// Decomposition into the vertical/horizontal shear pair; nullopt when
// h11 <= 0 or a validity constraint fails.
std::optional<ShearParams> ShearDecompose(const AffineModel& model);

// The 8-tap 1/64-pel warp interpolation kernels (193 rows for offsets in
// [-1, +2]; integer offsets are exact impulses).
std::span<const std::array<int16_t, 8>> WarpFilterTable();

struct WarpStats {
  int64_t multiplies = 0;
  // Extreme source offsets relative to each unit's anchor sample; the
  // validity constraints keep these within [-7, 7].
  int min_offset_x = 0, max_offset_x = 0;
  int min_offset_y = 0, max_offset_y = 0;
};

// Two-stage warped prediction of a block whose top-left corner is (x, y),
// decomposed into 8x8 units. Requires width/height multiples of 8 and a
// valid model (std::invalid_argument otherwise).
PixelGrid WarpBlock(const Plane& ref, const AffineModel& model, int x, int y,
                    BlockSize size, WarpStats* stats = nullptr);

// ---- Local affine estimation --------------------------------------------------

struct MvSample {
  double center_x = 0;  // block center, pixels
  double center_y = 0;
  MotionVector mv;      // 1/8 pel
};

constexpr int kMaxAffineNeighbors = 8;
// Neighbors whose motion differs from the current block by more than 8
// pixels in any component are discarded.
constexpr int kAffineMvDeltaLimitQ3 = 8 * 8;

// Least-squares fit of the non-translational parameters from spatial
// neighbor motion (the translation is the current block's own vector).
// Returns nullopt when fewer than two usable neighbors remain or the normal
// matrix is singular.
std::optional<AffineModel> EstimateLocalAffine(
    const MvSample& current, std::span<const MvSample> neighbors);

}  // namespace av1lab

#endif  // AV1LAB_WARP_H_
