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

#include "av1lab/warp.h"

#include <algorithm>
#include <cmath>

namespace av1lab {
namespace {

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(M_PI * x) / (M_PI * x);
}

double BesselI0(double x) {
  double sum = 1.0, term = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= (x / (2 * k)) * (x / (2 * k));
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double Kaiser(double t, double half_width, double beta) {
  const double r = t / half_width;
  if (std::abs(r) >= 1.0) return 0.0;
  return BesselI0(beta * std::sqrt(1.0 - r * r)) / BesselI0(beta);
}

// Kaiser-windowed sinc prototype (beta 5), normalized to a tap sum of 128.
// Row i covers the fractional offset (i - 64) / 64 in [-1, +2]; the taps are
// anchored so tap m multiplies the source sample at anchor - 3 + m.
struct WarpTable {
  std::array<std::array<int16_t, 8>, kWarpFilterRows> rows{};
  WarpTable() {
    for (int idx = 0; idx < kWarpFilterRows; ++idx) {
      const double off = (idx - kWarpPhases) / static_cast<double>(kWarpPhases);
      double raw[8];
      double sum = 0;
      for (int m = 0; m < 8; ++m) {
        const double t = m - 3 - off;
        raw[m] = Sinc(t) * Kaiser(t, 4.0, 5.0);
        sum += raw[m];
      }
      int tap_sum = 0;
      int largest = 0;
      for (int m = 0; m < 8; ++m) {
        rows[idx][m] = static_cast<int16_t>(std::llround(128.0 * raw[m] / sum));
        tap_sum += rows[idx][m];
        if (std::abs(rows[idx][m]) > std::abs(rows[idx][largest])) largest = m;
      }
      rows[idx][largest] = static_cast<int16_t>(rows[idx][largest] + 128 - tap_sum);
    }
  }
};

const WarpTable& Table() {
  static const WarpTable table;
  return table;
}

}  // namespace

bool ShearValid(const ShearParams& p) {
  const int64_t one = kWarpParamOne;
  return 4 * std::abs(int64_t{p.alpha}) + 7 * std::abs(int64_t{p.beta}) < one &&
         4 * std::abs(int64_t{p.gamma}) + 4 * std::abs(int64_t{p.delta}) < one;
}

std::optional<ShearParams> ShearDecompose(const AffineModel& model) {
  if (model.h11 <= 0) return std::nullopt;
  ShearParams p;
  p.alpha = model.h11 - kWarpParamOne;
  p.beta = model.h12;
  // gamma = h21 / h11 through a 16-bit reciprocal: with e = floor(log2 h11),
  // R = round(2^(16+e) / h11) and gamma = round(h21 * R / 2^(e+4)).
  const int e = FloorLog2(static_cast<uint32_t>(model.h11));
  const int64_t recip = RoundDivide(int64_t{1} << (16 + e), model.h11);
  p.gamma = RoundShift(int64_t{model.h21} * recip, e + 4);
  p.delta = model.h22 - RoundShift(int64_t{p.gamma} * model.h12, kWarpParamBits) -
            kWarpParamOne;
  if (!ShearValid(p)) return std::nullopt;
  return p;
}

std::span<const std::array<int16_t, 8>> WarpFilterTable() {
  return std::span<const std::array<int16_t, 8>>(Table().rows.data(),
                                                 kWarpFilterRows);
}

PixelGrid WarpBlock(const Plane& ref, const AffineModel& model, int x, int y,
                    BlockSize size, WarpStats* stats) {
  if (size.width < 8 || size.height < 8 || (size.width % 8) != 0 ||
      (size.height % 8) != 0) {
    throw std::invalid_argument("warp blocks must be a multiple of 8x8");
  }
  const std::optional<ShearParams> shear = ShearDecompose(model);
  if (!shear) throw std::invalid_argument("invalid affine model");
  const auto& table = Table().rows;
  PixelGrid out(size.width, size.height);

  auto track_x = [&](int dx) {
    if (stats == nullptr) return;
    stats->min_offset_x = std::min(stats->min_offset_x, dx);
    stats->max_offset_x = std::max(stats->max_offset_x, dx);
  };
  auto track_y = [&](int dy) {
    if (stats == nullptr) return;
    stats->min_offset_y = std::min(stats->min_offset_y, dy);
    stats->max_offset_y = std::max(stats->max_offset_y, dy);
  };

  for (int by = 0; by < size.height; by += 8) {
    for (int bx = 0; bx < size.width; bx += 8) {
      // The unit's center sample, displaced by the translational vector.
      const int32_t cx64 = ((x + bx + 4) << 6) + model.tx_q64;
      const int32_t cy64 = ((y + by + 4) << 6) + model.ty_q64;
      const int ix4 = cx64 >> 6, fx4 = cx64 & 63;
      const int iy4 = cy64 >> 6, fy4 = cy64 & 63;

      // Horizontal pass: 15 rows by 8 columns of intermediates, each tap
      // window anchored at the nominal integer column; the per-pixel offset
      // deviation selects the extended-phase kernel row.
      int32_t mid[15][8];
      for (int r = -7; r <= 7; ++r) {
        const int sy = iy4 + r;
        track_y(r);
        for (int l = -4; l <= 3; ++l) {
          const int dev = RoundShift(
              int64_t{shear->alpha} * l + int64_t{shear->beta} * r, 6);
          const int idx = Clamp(kWarpPhases + fx4 + dev, 0, kWarpFilterRows - 1);
          const auto& taps = table[idx];
          int32_t acc = 0;
          for (int m = 0; m < 8; ++m) {
            const int sx = ix4 + l - 3 + m;
            track_x(l - 3 + m);
            acc += taps[m] * ref.at_clamped(sx, sy);
          }
          if (stats != nullptr) stats->multiplies += 8;
          mid[r + 7][l + 4] = RoundShift(acc, kInterpHorizontalShift);
        }
      }

      // Vertical pass over the intermediate array.
      for (int i = -4; i <= 3; ++i) {
        for (int l = -4; l <= 3; ++l) {
          const int dev = RoundShift(
              int64_t{shear->gamma} * l + int64_t{shear->delta} * i, 6);
          const int idx = Clamp(kWarpPhases + fy4 + dev, 0, kWarpFilterRows - 1);
          const auto& taps = table[idx];
          int64_t acc = 0;
          for (int m = 0; m < 8; ++m) {
            acc += taps[m] * int64_t{mid[i + 4 + m][l + 4]};
          }
          if (stats != nullptr) stats->multiplies += 8;
          out.at(bx + l + 4, by + i + 4) =
              ClampPixel(RoundShift(acc, kInterpVerticalShift), ref.bit_depth());
        }
      }
    }
  }
  return out;
}

std::optional<AffineModel> EstimateLocalAffine(
    const MvSample& current, std::span<const MvSample> neighbors) {
  if (neighbors.size() > kMaxAffineNeighbors) {
    throw std::invalid_argument("at most 8 affine neighbors");
  }
  // Sample pairs: source = neighbor center offset, destination = source plus
  // the motion difference (1/8 pel converted to pixels).
  double sxx = 0, sxy = 0, syy = 0;
  double sqx = 0, sqy = 0, srx = 0, sry = 0;
  int usable = 0;
  for (const MvSample& nb : neighbors) {
    const int32_t drow = nb.mv.row - current.mv.row;
    const int32_t dcol = nb.mv.col - current.mv.col;
    if (std::abs(drow) > kAffineMvDeltaLimitQ3 ||
        std::abs(dcol) > kAffineMvDeltaLimitQ3) {
      continue;  // motion too different from the current block
    }
    const double a = nb.center_x - current.center_x;
    const double b = nb.center_y - current.center_y;
    const double ap = a + dcol / 8.0;
    const double bp = b + drow / 8.0;
    sxx += a * a;
    sxy += a * b;
    syy += b * b;
    sqx += a * ap;
    sqy += b * ap;
    srx += a * bp;
    sry += b * bp;
    ++usable;
  }
  if (usable < 2) return std::nullopt;
  const double det = sxx * syy - sxy * sxy;
  if (std::abs(det) < 1e-9) return std::nullopt;
  const double h11 = (syy * sqx - sxy * sqy) / det;
  const double h12 = (sxx * sqy - sxy * sqx) / det;
  const double h21 = (syy * srx - sxy * sry) / det;
  const double h22 = (sxx * sry - sxy * srx) / det;

  AffineModel model;
  auto q12 = [](double v) {
    return static_cast<int32_t>(
        Clamp<int64_t>(std::llround(v * kWarpParamOne), -32767, 32767));
  };
  model.h11 = q12(h11);
  model.h12 = q12(h12);
  model.h21 = q12(h21);
  model.h22 = q12(h22);
  model.tx_q64 = current.mv.col * 8;
  model.ty_q64 = current.mv.row * 8;
  return model;
}

}  // namespace av1lab
