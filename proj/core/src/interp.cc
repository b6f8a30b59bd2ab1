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

#include "av1lab/interp.h"

#include <algorithm>

namespace av1lab {
namespace {

// Frozen windowed-sinc tap tables, 16 phases each summing to 128. Phase 8
// carries the half-pel rows
//   SMOOTH  [-2, 14, 52, 52, 14, -2]
//   REGULAR [2, -14, 76, 76, -14, 2]
//   SHARP   [-4, 12, -24, 80, 80, -24, 12, -4]
// and the 4-tap variants [12, 52, 52, 12] / [-12, 76, 76, -12]; phases 9..15
// mirror 7..1.
constexpr int16_t kSmooth6[16][8] = {
    {0, 0, 128, 0, 0, 0, 0, 0},     {4, 34, 52, 37, 8, -7, 0, 0},
    {3, 32, 52, 39, 9, -7, 0, 0},   {2, 30, 51, 41, 11, -7, 0, 0},
    {0, 28, 51, 42, 13, -6, 0, 0},  {-1, 26, 50, 44, 15, -6, 0, 0},
    {-2, 24, 50, 45, 16, -5, 0, 0}, {-3, 22, 50, 46, 18, -5, 0, 0},
    {-2, 14, 52, 52, 14, -2, 0, 0}, {-5, 18, 46, 50, 22, -3, 0, 0},
    {-5, 16, 45, 50, 24, -2, 0, 0}, {-6, 15, 44, 50, 26, -1, 0, 0},
    {-6, 13, 42, 51, 28, 0, 0, 0},  {-7, 11, 41, 51, 30, 2, 0, 0},
    {-7, 9, 39, 52, 32, 3, 0, 0},   {-7, 8, 37, 52, 34, 4, 0, 0}};

constexpr int16_t kRegular6[16][8] = {
    {0, 0, 128, 0, 0, 0, 0, 0},      {-5, 7, 113, 20, -9, 2, 0, 0},
    {-3, 1, 111, 27, -10, 2, 0, 0},  {-2, -4, 108, 35, -12, 3, 0, 0},
    {0, -8, 103, 44, -14, 3, 0, 0},  {1, -11, 98, 52, -15, 3, 0, 0},
    {2, -13, 91, 60, -15, 3, 0, 0},  {2, -15, 85, 69, -16, 3, 0, 0},
    {2, -14, 76, 76, -14, 2, 0, 0},  {3, -16, 69, 85, -15, 2, 0, 0},
    {3, -15, 60, 91, -13, 2, 0, 0},  {3, -15, 52, 98, -11, 1, 0, 0},
    {3, -14, 44, 103, -8, 0, 0, 0},  {3, -12, 35, 108, -4, -2, 0, 0},
    {2, -10, 27, 111, 1, -3, 0, 0},  {2, -9, 20, 113, 7, -5, 0, 0}};

constexpr int16_t kSharp8[16][8] = {
    {0, 0, 0, 128, 0, 0, 0, 0},          {-1, 2, -6, 127, 7, -2, 1, 0},
    {-1, 4, -12, 125, 16, -5, 1, 0},     {-1, 5, -16, 121, 25, -8, 2, 0},
    {-1, 6, -18, 114, 36, -11, 3, -1},   {-2, 7, -20, 107, 46, -13, 4, -1},
    {-2, 7, -21, 99, 57, -16, 5, -1},    {-1, 7, -21, 88, 68, -18, 6, -1},
    {-4, 12, -24, 80, 80, -24, 12, -4},  {-1, 6, -18, 68, 88, -21, 7, -1},
    {-1, 5, -16, 57, 99, -21, 7, -2},    {-1, 4, -13, 46, 107, -20, 7, -2},
    {-1, 3, -11, 36, 114, -18, 6, -1},   {0, 2, -8, 25, 121, -16, 5, -1},
    {0, 1, -5, 16, 125, -12, 4, -1},     {0, 1, -2, 7, 127, -6, 2, -1}};

constexpr int16_t kSmooth4[16][8] = {
    {0, 128, 0, 0, 0, 0, 0, 0},   {21, 84, 31, -8, 0, 0, 0, 0},
    {17, 83, 36, -8, 0, 0, 0, 0}, {13, 82, 41, -8, 0, 0, 0, 0},
    {9, 80, 47, -8, 0, 0, 0, 0},  {5, 78, 52, -7, 0, 0, 0, 0},
    {2, 75, 57, -6, 0, 0, 0, 0},  {0, 71, 62, -5, 0, 0, 0, 0},
    {12, 52, 52, 12, 0, 0, 0, 0}, {-5, 62, 71, 0, 0, 0, 0, 0},
    {-6, 57, 75, 2, 0, 0, 0, 0},  {-7, 52, 78, 5, 0, 0, 0, 0},
    {-8, 47, 80, 9, 0, 0, 0, 0},  {-8, 41, 82, 13, 0, 0, 0, 0},
    {-8, 36, 83, 17, 0, 0, 0, 0}, {-8, 31, 84, 21, 0, 0, 0, 0}};

constexpr int16_t kRegular4[16][8] = {
    {0, 128, 0, 0, 0, 0, 0, 0},    {-5, 128, 6, -1, 0, 0, 0, 0},
    {-9, 125, 14, -2, 0, 0, 0, 0}, {-12, 121, 23, -4, 0, 0, 0, 0},
    {-14, 114, 33, -5, 0, 0, 0, 0}, {-15, 107, 43, -7, 0, 0, 0, 0},
    {-15, 98, 54, -9, 0, 0, 0, 0}, {-14, 87, 66, -11, 0, 0, 0, 0},
    {-12, 76, 76, -12, 0, 0, 0, 0}, {-11, 66, 87, -14, 0, 0, 0, 0},
    {-9, 54, 98, -15, 0, 0, 0, 0}, {-7, 43, 107, -15, 0, 0, 0, 0},
    {-5, 33, 114, -14, 0, 0, 0, 0}, {-4, 23, 121, -12, 0, 0, 0, 0},
    {-2, 14, 125, -9, 0, 0, 0, 0}, {-1, 6, 128, -5, 0, 0, 0, 0}};

InterpFilterSet MakeSet(InterpFilterKind kind, int taps,
                        const int16_t table[16][8]) {
  InterpFilterSet set;
  set.kind = kind;
  set.taps = taps;
  for (int p = 0; p < kInterpPhases; ++p) {
    for (int i = 0; i < kInterpMaxTaps; ++i) set.coef[p][i] = table[p][i];
  }
  return set;
}

}  // namespace

const InterpFilterSet& InterpFilterSet::Smooth6() {
  static const InterpFilterSet set = MakeSet(InterpFilterKind::kSmooth, 6, kSmooth6);
  return set;
}
const InterpFilterSet& InterpFilterSet::Regular6() {
  static const InterpFilterSet set =
      MakeSet(InterpFilterKind::kRegular, 6, kRegular6);
  return set;
}
const InterpFilterSet& InterpFilterSet::Sharp8() {
  static const InterpFilterSet set = MakeSet(InterpFilterKind::kSharp, 8, kSharp8);
  return set;
}
const InterpFilterSet& InterpFilterSet::Smooth4() {
  static const InterpFilterSet set = MakeSet(InterpFilterKind::kSmooth, 4, kSmooth4);
  return set;
}
const InterpFilterSet& InterpFilterSet::Regular4() {
  static const InterpFilterSet set =
      MakeSet(InterpFilterKind::kRegular, 4, kRegular4);
  return set;
}

const InterpFilterSet& InterpFilterSet::For(InterpFilterKind kind, int block_dim) {
  if (block_dim <= 4) {
    return kind == InterpFilterKind::kSmooth ? Smooth4() : Regular4();
  }
  switch (kind) {
    case InterpFilterKind::kSmooth: return Smooth6();
    case InterpFilterKind::kSharp: return Sharp8();
    default: return Regular6();
  }
}

InterpFilterSet InterpFilterSet::Custom(
    int taps, std::span<const std::array<int16_t, 8>> rows) {
  if (taps < 2 || taps > kInterpMaxTaps ||
      rows.size() != static_cast<size_t>(kInterpPhases)) {
    throw std::invalid_argument("custom filter needs 16 phase rows");
  }
  InterpFilterSet set;
  set.taps = taps;
  for (int p = 0; p < kInterpPhases; ++p) {
    int sum = 0;
    for (int i = 0; i < kInterpMaxTaps; ++i) {
      set.coef[p][i] = rows[p][i];
      sum += rows[p][i];
    }
    if (sum != 1 << kFilterScaleBits) {
      throw std::invalid_argument("filter phase taps must sum to 128");
    }
  }
  return set;
}

PixelGrid InterpSubpel(const Plane& ref, int x, int y, MotionVector mv,
                       const InterpFilterSet& filter_h,
                       const InterpFilterSet& filter_v, BlockSize size) {
  const int w = size.width, h = size.height;
  // 1/8-pel motion maps onto the even 1/16-pel phases.
  const int base_x = x + (mv.col >> 3);
  const int base_y = y + (mv.row >> 3);
  const int phase_x = (mv.col & 7) << 1;
  const int phase_y = (mv.row & 7) << 1;

  const int taps_v = filter_v.taps;
  const int anchor_v = filter_v.anchor();
  const int rows = h + taps_v - 1;

  // Horizontal pass over every row the vertical taps will touch, keeping 3
  // extra fractional bits.
  Grid<int32_t> mid(w, rows);
  const auto& hrow = filter_h.coef[phase_x];
  const int anchor_h = filter_h.anchor();
  for (int r = 0; r < rows; ++r) {
    const int sy = base_y + r - anchor_v;
    for (int c = 0; c < w; ++c) {
      int32_t acc = 0;
      for (int i = 0; i < filter_h.taps; ++i) {
        acc += hrow[i] * ref.at_clamped(base_x + c - anchor_h + i, sy);
      }
      mid.at(c, r) = RoundShift(acc, kInterpHorizontalShift);
    }
  }

  // Vertical pass back to pixel range.
  PixelGrid out(w, h);
  const auto& vrow = filter_v.coef[phase_y];
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      int64_t acc = 0;
      for (int i = 0; i < taps_v; ++i) acc += vrow[i] * int64_t{mid.at(c, r + i)};
      out.at(c, r) = ClampPixel(RoundShift(acc, kInterpVerticalShift),
                                ref.bit_depth());
    }
  }
  return out;
}

}  // namespace av1lab
