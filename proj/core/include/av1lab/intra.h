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

#ifndef AV1LAB_INTRA_H_
#define AV1LAB_INTRA_H_

#include <array>
#include <vector>

#include "av1lab/block.h"
#include "av1lab/frame.h"
#include "av1lab/interp.h"

namespace av1lab {

// Boundary reference samples for one block. The above row spans 2*width
// samples and the left column 2*height samples (the oblique-angle
// extension); index -1 addresses the shared top-left corner. Unavailable
// stretches are filled by replicating the nearest available sample when
// gathering from a reconstruction.
class IntraEdges {
 public:
  IntraEdges(std::vector<uint16_t> above, std::vector<uint16_t> left,
             uint16_t top_left, int bit_depth, bool above_right_available = true,
             bool bottom_left_available = true);

  // Collects edges for the block at (x, y) from a reconstruction, limited to
  // `available` (the tile interior that is already coded). Rows/columns
  // outside it are synthesized by replication; a block with no coded
  // neighbors at all uses the mid-gray value.
  static IntraEdges Gather(const Plane& recon, const Rect& available, int x,
                           int y, BlockSize size);

  uint16_t above(int i) const {  // i in [-1, 2*width)
    if (i < 0) return top_left_;
    const int n = static_cast<int>(above_.size());
    return above_[i < n ? i : n - 1];
  }
  uint16_t left(int i) const {  // i in [-1, 2*height)
    if (i < 0) return top_left_;
    const int n = static_cast<int>(left_.size());
    return left_[i < n ? i : n - 1];
  }
  uint16_t top_left() const { return top_left_; }
  int width() const { return static_cast<int>(above_.size()) / 2; }
  int height() const { return static_cast<int>(left_.size()) / 2; }
  int bit_depth() const { return bit_depth_; }
  bool above_right_available() const { return above_right_available_; }
  bool bottom_left_available() const { return bottom_left_available_; }

  // Shifts every reference sample by a constant (test hook for the
  // intensity-shift covariance property).
  IntraEdges Shifted(int delta) const;

 private:
  std::vector<uint16_t> above_;
  std::vector<uint16_t> left_;
  uint16_t top_left_;
  int bit_depth_;
  bool above_right_available_;
  bool bottom_left_available_;
};

// ---- Directional prediction -------------------------------------------------

constexpr std::array<int, 8> kDirectionalBaseAngles = {45,  67,  90,  113,
                                                       135, 157, 180, 203};
constexpr int kAngleDeltaStep = 3;
constexpr int kMaxAngleDelta = 3;

struct DirectionalMode {
  int base_index = 2;    // index into kDirectionalBaseAngles (default vertical)
  int angle_delta = 0;   // in [-3, 3], 3 degrees per unit

  int angle() const {
    return kDirectionalBaseAngles[base_index] + kAngleDeltaStep * angle_delta;
  }
};

// Projects each pixel along the prediction angle onto the above row or left
// column at 1/64-pel resolution and applies the 2-tap bilinear filter.
// Throws std::invalid_argument for a nonzero angle_delta on sub-8x8 blocks.
PixelGrid PredictDirectional(const IntraEdges& edges, DirectionalMode mode,
                             BlockSize size);

// ---- Non-directional predictors ----------------------------------------------

PixelGrid PredictDc(const IntraEdges& edges, BlockSize size);

enum class SmoothVariant : uint8_t { kVertical, kHorizontal, kBoth };

// Distance-weighted interpolation toward the top-right / bottom-left corner
// samples; kBoth is the rounded average of the two directional variants.
PixelGrid PredictSmooth(const IntraEdges& edges, SmoothVariant variant,
                        BlockSize size);

// Per-pixel argmin over {T, L, TL} against T + L - TL, ties resolved in
// that order.
PixelGrid PredictPaeth(const IntraEdges& edges, BlockSize size);

// ---- Recursive-filter prediction ---------------------------------------------

constexpr int kRecursiveFilterSets = 5;

// First-order recursion weights in Q6; alpha applies to the neighbor above,
// beta to the left, gamma to the above-left. Every set sums to 64 so the
// predictor is intensity-shift covariant.
struct RecursiveFilterCoeffs {
  int alpha_q6;
  int beta_q6;
  int gamma_q6;
};

const RecursiveFilterCoeffs& RecursiveFilterSet(int set_index);

// The 4x2-patch expansion of the recursion: weight of reference p0..p6 (p0
// above-left corner, p1..p4 above row, p5..p6 left column) for each of the
// 8 patch outputs in raster order. Exact dyadic values.
std::array<std::array<double, 7>, 8> RecursivePatchWeights(int set_index);

// Patch-by-patch prediction, bit-exact equal to running the recursion per
// pixel at full precision inside each patch (patch outputs are rounded to
// pixels before later patches reference them).
PixelGrid PredictRecursiveFilter(const IntraEdges& edges, int set_index,
                                 BlockSize size);

// ---- Chroma from luma ---------------------------------------------------------

// dc_pred plus the scaled zero-mean AC of the subsampled luma block.
// `scaling_q6` is a signed Q6 factor in [-128, 128].
PixelGrid PredictCfl(const PixelGrid& recon_luma_sub, const PixelGrid& dc_pred,
                     int scaling_q6, int bit_depth);

// ---- Palette ------------------------------------------------------------------

constexpr int kPaletteMinColors = 2;
constexpr int kPaletteMaxColors = 8;

struct Palette {
  std::vector<uint16_t> base_colors;  // 2..8 values
  Grid<uint8_t> index_map;            // per-pixel indexes into base_colors
};

PixelGrid PaletteReconstruct(const Palette& palette);

// Deterministic Lloyd fit of k base colors with a final nearest-color
// assignment pass (every index maps its pixel to the closest base color of
// the returned palette).
Palette PaletteFit(const PixelGrid& block, int k);

// ---- Intra block copy ----------------------------------------------------------

// Copies a block from previously coded samples of the same plane. The
// motion vector is in full luma pixels; on a subsampled plane an odd
// component lands on a half-pel position and is bilinearly interpolated.
// Throws std::invalid_argument when the source region (including the
// bilinear support) is not fully inside `coded_region`.
PixelGrid IntraBcCopy(const Plane& recon, const Rect& coded_region,
                      MotionVector mv_fullpel, int x, int y, int width,
                      int height);

}  // namespace av1lab

#endif  // AV1LAB_INTRA_H_
