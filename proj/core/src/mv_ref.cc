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

#include "av1lab/mv_ref.h"

#include <algorithm>

namespace av1lab {
namespace {

// Returns the candidate motion for `unit` toward the selected reference, or
// nullopt when the unit does not use it.
std::optional<MvCandidate> MatchUnit(const MotionInfo& unit,
                                     const RefSelector& ref) {
  MvCandidate c;
  if (ref.compound()) {
    if (unit.ref0 == ref.ref0 && unit.ref1 == ref.ref1) {
      c.mv0 = unit.mv0;
      c.mv1 = unit.mv1;
      c.compound = true;
      return c;
    }
    return std::nullopt;
  }
  if (unit.ref0 == ref.ref0) {
    c.mv0 = unit.mv0;
    return c;
  }
  if (unit.ref1 == ref.ref0) {
    c.mv0 = unit.mv1;
    return c;
  }
  return std::nullopt;
}

bool SameMotion(const MvCandidate& a, const MvCandidate& b) {
  return a.compound == b.compound && a.mv0 == b.mv0 &&
         (!a.compound || a.mv1 == b.mv1);
}

}  // namespace

std::vector<MvCandidate> ScanSpatialRefs(const SpatialMvGrid& grid,
                                         const BlockGeometry& block,
                                         const RefSelector& ref) {
  const int ux0 = block.x >> 2;
  const int uy0 = block.y >> 2;
  const int uw = block.size.width >> 2;
  const int uh = block.size.height >> 2;

  std::vector<MvCandidate> candidates;
  auto visit = [&](int ux, int uy, bool nearest) {
    const MotionInfo* unit = grid.Get(ux, uy);
    if (unit == nullptr) return;
    auto match = MatchUnit(*unit, ref);
    if (!match) return;
    for (MvCandidate& c : candidates) {
      if (SameMotion(c, *match)) {
        ++c.weight;
        c.from_nearest |= nearest;
        return;
      }
    }
    if (candidates.size() < kMaxScanCandidates) {
      match->from_nearest = nearest;
      candidates.push_back(*match);
    }
  };

  // Stage 1: immediate above row at 4x4 granularity.
  for (int i = 0; i < uw; ++i) visit(ux0 + i, uy0 - 1, true);
  // Stage 2: immediate left column at 4x4 granularity.
  for (int j = 0; j < uh; ++j) visit(ux0 - 1, uy0 + j, true);
  // Stage 3: top-right unit.
  visit(ux0 + uw, uy0 - 1, true);
  // Stages 4..7: outer 8x8 rows and columns, interleaved, through their
  // bottom-right representative units.
  const int bx8 = block.x >> 3;
  const int by8 = block.y >> 3;
  const int w8 = std::max(1, block.size.width >> 3);
  const int h8 = std::max(1, block.size.height >> 3);
  for (int k = 1; k <= 2; ++k) {
    const int row_units = (by8 - 1 - k) * 2 + 1;
    for (int c8 = 0; c8 < w8; ++c8) visit((bx8 + c8) * 2 + 1, row_units, false);
    const int col_units = (bx8 - 1 - k) * 2 + 1;
    for (int r8 = 0; r8 < h8; ++r8) visit(col_units, (by8 + r8) * 2 + 1, false);
  }
  return candidates;
}

std::optional<CompactMvRecord> PackMv(MotionVector mv, int ref_idx) {
  if (std::abs(mv.row) >= kCompactMvLimit || std::abs(mv.col) >= kCompactMvLimit ||
      ref_idx < 0 || ref_idx >= kMaxMotionFieldRefs) {
    return std::nullopt;
  }
  const uint32_t row13 = static_cast<uint32_t>(mv.row) & 0x1FFF;
  const uint32_t col13 = static_cast<uint32_t>(mv.col) & 0x1FFF;
  return CompactMvRecord{row13 | (col13 << 13) |
                         (static_cast<uint32_t>(ref_idx) << 26)};
}

namespace {
int32_t SignExtend13(uint32_t v) {
  return static_cast<int32_t>(v << 19) >> 19;
}
}  // namespace

MotionVector UnpackMv(CompactMvRecord record) {
  return MotionVector{SignExtend13(record.bits & 0x1FFF),
                      SignExtend13((record.bits >> 13) & 0x1FFF)};
}

int UnpackRef(CompactMvRecord record) {
  return static_cast<int>((record.bits >> 26) & 3);
}

bool MotionField::TrySet(int bx, int by, MotionVector mv, MfOrigin origin) {
  MotionFieldEntry& e = entries_.at(bx, by);
  if (e.origin == MfOrigin::kInterpolated) return false;
  if (e.origin == MfOrigin::kExtrapolated && origin != MfOrigin::kInterpolated) {
    return false;
  }
  e.mv = mv;
  e.origin = origin;
  return true;
}

void ProjectMotionField(const Grid<CompactMvRecord>& records,
                        std::span<const uint8_t> record_valid, int d1, int d2,
                        int d3, bool same_side, bool extrapolate,
                        MotionField& field, ProjectionStats* stats) {
  if (d1 < 1 || d2 < 1 || d3 < 1) {
    throw std::invalid_argument("frame distances must be >= 1");
  }
  if (record_valid.size() != records.size()) {
    throw std::invalid_argument("record validity size mismatch");
  }
  const MfOrigin origin =
      extrapolate ? MfOrigin::kExtrapolated : MfOrigin::kInterpolated;
  for (int by = 0; by < records.height(); ++by) {
    for (int bx = 0; bx < records.width(); ++bx) {
      if (!record_valid[static_cast<size_t>(by) * records.width() + bx]) continue;
      const MotionVector mv = UnpackMv(records.at(bx, by));
      // Displacement in 8x8-block units (1/8 pel over 64 per block).
      const int disp_row =
          static_cast<int>(RoundDivide(int64_t{mv.row} * d3, int64_t{d1} * 64));
      const int disp_col =
          static_cast<int>(RoundDivide(int64_t{mv.col} * d3, int64_t{d1} * 64));
      const int blk_row = extrapolate ? by - disp_row : by + disp_row;
      const int blk_col = extrapolate ? bx - disp_col : bx + disp_col;
      const int base_row = (by >> 3) << 3;
      const int base_col = (bx >> 3) << 3;
      const bool in_window = blk_row >= base_row && blk_row < base_row + 8 &&
                             blk_col >= base_col - 8 && blk_col < base_col + 16;
      if (!in_window || blk_row < 0 || blk_row >= field.blocks_y() ||
          blk_col < 0 || blk_col >= field.blocks_x()) {
        if (stats != nullptr) ++stats->out_of_window;
        continue;
      }
      const int sign = same_side ? 1 : -1;
      const MotionVector mf{
          sign * static_cast<int32_t>(RoundDivide(int64_t{mv.row} * d2, d1)),
          sign * static_cast<int32_t>(RoundDivide(int64_t{mv.col} * d2, d1))};
      if (field.TrySet(blk_col, blk_row, mf, origin)) {
        if (stats != nullptr) ++stats->written;
      } else if (stats != nullptr) {
        ++stats->kept_existing;
      }
    }
  }
}

RefListResult BuildRefList(std::span<const MvCandidate> spatial,
                           std::span<const MotionVector> temporal,
                           bool neighbors_have_nonzero_mvd) {
  std::vector<MvCandidate> merged(spatial.begin(), spatial.end());
  for (const MotionVector& mv : temporal) {
    bool found = false;
    for (MvCandidate& c : merged) {
      if (!c.compound && c.mv0 == mv) {
        ++c.weight;
        found = true;
        break;
      }
    }
    if (!found) {
      MvCandidate c;
      c.mv0 = mv;
      c.weight = 1;
      c.from_nearest = false;  // temporal entries join the second category
      merged.push_back(c);
    }
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const MvCandidate& a, const MvCandidate& b) {
                     if (a.from_nearest != b.from_nearest) return a.from_nearest;
                     return a.weight > b.weight;
                   });
  RefListResult result;
  const size_t n = std::min<size_t>(merged.size(), kMaxRefListSize);
  result.list.assign(merged.begin(), merged.begin() + n);
  result.zero_mvd_context = (neighbors_have_nonzero_mvd ? 1 : 0) |
                            (result.list.size() >= 2 ? 2 : 0);
  return result;
}

}  // namespace av1lab
