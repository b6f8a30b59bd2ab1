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

#ifndef AV1LAB_MV_REF_H_
#define AV1LAB_MV_REF_H_

#include <optional>
#include <span>
#include <vector>

#include "av1lab/block.h"
#include "av1lab/common.h"
#include "av1lab/interp.h"

namespace av1lab {

// ---- Spatial scan -------------------------------------------------------------

struct RefSelector {
  int ref0 = 0;
  int ref1 = -1;  // >= 0 selects compound candidates
  bool compound() const { return ref1 >= 0; }
  bool operator==(const RefSelector&) const = default;
};

// Motion info of one 4x4 unit (what the line buffer would hold).
struct MotionInfo {
  bool valid = false;
  int ref0 = -1;
  int ref1 = -1;
  MotionVector mv0;
  MotionVector mv1;
};

// Dense 4x4-unit motion grid covering the already-coded neighborhood.
class SpatialMvGrid {
 public:
  SpatialMvGrid(int units_x, int units_y) : info_(units_x, units_y) {}
  void Set(int ux, int uy, const MotionInfo& info) { info_.at(ux, uy) = info; }
  const MotionInfo* Get(int ux, int uy) const {
    if (ux < 0 || uy < 0 || ux >= info_.width() || uy >= info_.height()) {
      return nullptr;
    }
    const MotionInfo& m = info_.at(ux, uy);
    return m.valid ? &m : nullptr;
  }

 private:
  Grid<MotionInfo> info_;
};

struct MvCandidate {
  MotionVector mv0;
  MotionVector mv1;          // compound second vector
  bool compound = false;
  int weight = 1;            // appearance count over the scan range
  bool from_nearest = false;  // seen in the immediate row/column/top-right
};

constexpr int kMaxScanCandidates = 8;

// Scans the spatial neighborhood for motion toward `ref`: the immediate
// above row and left column at 4x4 granularity plus the top-right unit, then
// the two outer 8x8 rows and columns interleaved, where each 8x8 block is
// represented by its bottom-right 4x4 unit. The first 8 distinct vectors are
// recorded; appearance counts keep accumulating over the whole scan.
std::vector<MvCandidate> ScanSpatialRefs(const SpatialMvGrid& grid,
                                         const BlockGeometry& block,
                                         const RefSelector& ref);

// ---- Compact motion storage ----------------------------------------------------

// 32-bit stored motion record: 13-bit signed row and column (1/8 pel) plus a
// 2-bit reference index.
struct CompactMvRecord {
  uint32_t bits = 0;
  bool operator==(const CompactMvRecord&) const = default;
};

constexpr int kCompactMvLimit = 1 << 12;  // components at or above are dropped
constexpr int kMaxMotionFieldRefs = 4;

std::optional<CompactMvRecord> PackMv(MotionVector mv, int ref_idx);
MotionVector UnpackMv(CompactMvRecord record);
int UnpackRef(CompactMvRecord record);

// ---- Motion field projection ----------------------------------------------------

enum class MfOrigin : uint8_t { kNone, kInterpolated, kExtrapolated };

struct MotionFieldEntry {
  MotionVector mv;
  MfOrigin origin = MfOrigin::kNone;
};

// Per-8x8-block projected motion toward one reference frame. Interpolated
// entries are never overwritten; extrapolated entries yield to interpolated
// ones; the first interpolated write wins.
class MotionField {
 public:
  MotionField(int blocks_x, int blocks_y) : entries_(blocks_x, blocks_y) {}
  const MotionFieldEntry& at(int bx, int by) const { return entries_.at(bx, by); }
  int blocks_x() const { return entries_.width(); }
  int blocks_y() const { return entries_.height(); }

  // Applies the overwrite policy; returns true when the entry was stored.
  bool TrySet(int bx, int by, MotionVector mv, MfOrigin origin);

 private:
  Grid<MotionFieldEntry> entries_;
};

struct ProjectionStats {
  int written = 0;
  int out_of_window = 0;
  int kept_existing = 0;
};

// One source frame's stored records projected onto the current frame's
// field. `records` is an 8x8-block grid (invalid cells empty); d1 is the
// distance the stored vectors span, d3 the distance between the current and
// the source frame, d2 the distance toward the target reference. Projection
// displacements are clamped to the 64x64 locality window around each source
// block: rows [base_row, base_row + 8), columns [base_col - 8, base_col + 16).
void ProjectMotionField(const Grid<CompactMvRecord>& records,
                        std::span<const uint8_t> record_valid, int d1, int d2,
                        int d3, bool same_side, bool extrapolate,
                        MotionField& field, ProjectionStats* stats = nullptr);

// ---- Dynamic reference list ------------------------------------------------------

constexpr int kMaxRefListSize = 4;

struct RefListResult {
  std::vector<MvCandidate> list;  // at most 4 entries
  // Context class for the zero-difference flag: bit 0 set when spatial
  // neighbors carry a non-zero motion difference, bit 1 set when at least
  // two predictors were found.
  int zero_mvd_context = 0;
};

// Ranks candidates in two categories (nearest spatial neighbors first, then
// the rest including temporal entries), each ordered by descending
// appearance count with earlier scan order breaking ties.
RefListResult BuildRefList(std::span<const MvCandidate> spatial,
                           std::span<const MotionVector> temporal,
                           bool neighbors_have_nonzero_mvd);

}  // namespace av1lab

#endif  // AV1LAB_MV_REF_H_
