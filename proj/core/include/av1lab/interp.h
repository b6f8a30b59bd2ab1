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

#ifndef AV1LAB_INTERP_H_
#define AV1LAB_INTERP_H_

#include <array>
#include <span>

#include "av1lab/block.h"
#include "av1lab/frame.h"

namespace av1lab {

// Translational motion vector in 1/8-pel units, row = vertical.
struct MotionVector {
  int32_t row = 0;
  int32_t col = 0;

  constexpr bool operator==(const MotionVector&) const = default;
  constexpr bool is_zero() const { return row == 0 && col == 0; }
};

enum class InterpFilterKind : uint8_t { kSmooth, kRegular, kSharp };

constexpr int kInterpPhases = 16;  // 1/16-pel phase resolution
constexpr int kInterpMaxTaps = 8;
constexpr int kFilterScaleBits = 7;  // taps sum to 128 per phase

// One direction's interpolation filter: taps for each of the 16 sub-pel
// phases. Tap i of phase p multiplies src[base + i - (taps/2 - 1)] where
// base is the integer sample position. Every phase's taps sum to 128.
struct InterpFilterSet {
  InterpFilterKind kind = InterpFilterKind::kRegular;
  int taps = 8;
  std::array<std::array<int16_t, kInterpMaxTaps>, kInterpPhases> coef{};

  int anchor() const { return taps / 2 - 1; }

  // Preset filters. The 6-tap SMOOTH/REGULAR and 8-tap SHARP are the frame
  // sizes' filters; the 4-tap variants serve blocks with a dimension <= 4
  // (no SHARP option at 4 taps).
  static const InterpFilterSet& Smooth6();
  static const InterpFilterSet& Regular6();
  static const InterpFilterSet& Sharp8();
  static const InterpFilterSet& Smooth4();
  static const InterpFilterSet& Regular4();

  // Preset lookup honoring the short-side rule: dims <= 4 use 4-tap filters
  // (SHARP falls back to REGULAR there).
  static const InterpFilterSet& For(InterpFilterKind kind, int block_dim);

  // A filter built from caller-provided rows (testing and the warp
  // equivalence path).
  static InterpFilterSet Custom(int taps,
                                std::span<const std::array<int16_t, 8>> rows);
};

// Rounding contract for the separable two-stage interpolation: the
// horizontal pass keeps 3 extra fractional bits, the vertical pass rounds
// back to pixel range.
constexpr int kInterpHorizontalShift = kFilterScaleBits - 3;  // >> 4
constexpr int kInterpVerticalShift = kFilterScaleBits + 3;    // >> 10

// Motion compensated prediction of a size.width x size.height block whose
// top-left corner maps to (x, y) in `ref` before displacement by `mv`
// (1/8-pel). Out-of-plane source samples replicate the nearest edge sample.
// Integer motion components reproduce reference samples exactly.
PixelGrid InterpSubpel(const Plane& ref, int x, int y, MotionVector mv,
                       const InterpFilterSet& filter_h,
                       const InterpFilterSet& filter_v, BlockSize size);

}  // namespace av1lab

#endif  // AV1LAB_INTERP_H_
