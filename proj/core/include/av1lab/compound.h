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

#ifndef AV1LAB_COMPOUND_H_
#define AV1LAB_COMPOUND_H_

#include <span>
#include <vector>

#include "av1lab/block.h"
#include "av1lab/common.h"
#include "av1lab/interp.h"

namespace av1lab {

// Per-pixel compound weights scaled by 64: the blend is
// (m * R1 + (64 - m) * R2) / 64.
constexpr int kMaskMax = 64;
using CompoundMask = Grid<uint8_t>;

// Distance weighted weight for the first reference (the one at distance d1).
// Values follow the quantized table {36, 44, 48, 52} for d1 <= d2 and mirror
// to 64 - m when the first reference is the farther one.
int MaskDistanceWeight(int d1, int d2);

// Difference weighted mask: 38 + |R1 - R2| / 16, complemented under sign=1,
// capped to [0, 64].
CompoundMask MaskDifferenceWeight(const PixelGrid& r1, const PixelGrid& r2,
                                  int sign);

// Per-pixel weighted sum scaled down by 1/64 with round-half-up.
PixelGrid BlendCompound(const PixelGrid& r1, const PixelGrid& r2,
                        const CompoundMask& mask, int bit_depth);

// ---- Wedge masks --------------------------------------------------------------

// Sixteen preset masks per eligible size: eight oblique split orientations
// at 22.5-degree steps, plus their complements (mask[k+8] = 64 - mask[k]).
// Values ramp from 64 to 0 across the split line with 32 on the line itself.
// Eligible sizes have both dimensions in [8, 32].
bool WedgeEligible(BlockSize size);
std::vector<CompoundMask> WedgeMasks(BlockSize size);

// ---- Overlapped block motion compensation --------------------------------------

// A neighboring prediction overlapping the current block: `pred` covers
// `extent` columns (above neighbors) or rows (left neighbors) starting at
// `offset`, reaching half the block dimension into the block.
struct ObmcNeighbor {
  PixelGrid pred;
  int offset = 0;
  int extent = 0;
};

// Raised-cosine weight for distance i of n (row index against block height
// for the above pass, column index against width for the left pass).
int ObmcWeight(int i, int n);

// Blends up to four above neighbors over the top half, then up to four left
// neighbors over the left half. Empty lists return the prediction unchanged.
PixelGrid ObmcBlend(const PixelGrid& pred,
                    std::span<const ObmcNeighbor> above_neighbors,
                    std::span<const ObmcNeighbor> left_neighbors,
                    int bit_depth);

// ---- Compound inter-intra -------------------------------------------------------

enum class InterIntraMode : uint8_t { kDc, kVertical, kHorizontal, kSmooth };

// Preset intra-weight mask: constant for DC, decaying along the prediction
// direction for V/H, and along min(x, y) for SMOOTH.
CompoundMask InterIntraMask(InterIntraMode mode, BlockSize size);

// Blend of an intra and an inter prediction through the preset mask (or a
// wedge mask), same 1/64 arithmetic as BlendCompound with the intra block
// as R1.
PixelGrid InterIntraBlend(const PixelGrid& inter, const PixelGrid& intra,
                          InterIntraMode mode, int bit_depth);
PixelGrid InterIntraBlendWedge(const PixelGrid& inter, const PixelGrid& intra,
                               int wedge_index, int bit_depth);

}  // namespace av1lab

#endif  // AV1LAB_COMPOUND_H_
