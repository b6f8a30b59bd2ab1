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

#include "av1lab/intra.h"

#include <algorithm>
#include <cmath>

namespace av1lab {
namespace {

// Quadratic-falloff smooth weights (scale 256) per block dimension.
constexpr uint8_t kSmoothWeights4[4] = {255, 149, 85, 64};
constexpr uint8_t kSmoothWeights8[8] = {255, 197, 146, 105, 73, 50, 37, 32};
constexpr uint8_t kSmoothWeights16[16] = {255, 225, 196, 170, 145, 123, 102, 84,
                                          68,  54,  43,  33,  26,  20,  17,  16};
constexpr uint8_t kSmoothWeights32[32] = {
    255, 240, 225, 210, 196, 182, 169, 157, 145, 133, 122, 111, 101, 92, 83, 74,
    66,  59,  52,  45,  39,  34,  29,  25,  21,  17,  14,  12,  10,  9,  8,  8};
constexpr uint8_t kSmoothWeights64[64] = {
    255, 248, 240, 233, 225, 218, 210, 203, 196, 189, 182, 176, 169, 163, 156,
    150, 144, 138, 133, 127, 121, 116, 111, 106, 101, 96,  91,  86,  82,  77,
    73,  69,  65,  61,  57,  54,  50,  47,  44,  41,  38,  35,  32,  29,  27,
    25,  22,  20,  18,  16,  15,  13,  12,  10,  9,   8,   7,   6,   6,   5,
    5,   4,   4,   4};

const uint8_t* SmoothWeights(int dim) {
  switch (dim) {
    case 4: return kSmoothWeights4;
    case 8: return kSmoothWeights8;
    case 16: return kSmoothWeights16;
    case 32: return kSmoothWeights32;
    case 64: return kSmoothWeights64;
    default:
      throw std::invalid_argument("smooth weights: unsupported dimension");
  }
}

constexpr RecursiveFilterCoeffs kRecursiveSets[kRecursiveFilterSets] = {
    {28, 28, 8},    // gentle omnidirectional
    {64, 0, 0},     // vertical copy chain
    {0, 64, 0},     // horizontal copy chain
    {48, 48, -32},  // plane-like
    {20, 20, 24},   // corner-weighted
};

// 1/64-pel projection slope tables, derived from the angle.
int AboveSlopeQ6(int angle_deg) {
  return static_cast<int>(
      std::llround(64.0 / std::tan(angle_deg * M_PI / 180.0)));
}
int LeftSlopeQ6(int angle_deg) {
  return static_cast<int>(std::llround(64.0 * std::tan(angle_deg * M_PI / 180.0)));
}

inline uint16_t Bilinear(uint16_t a, uint16_t b, int frac) {
  return static_cast<uint16_t>((a * (64 - frac) + b * frac + 32) >> 6);
}

void CheckBlock(BlockSize size) {
  if (!IsValidBlockSize(size)) throw std::invalid_argument("invalid block size");
}

}  // namespace

IntraEdges::IntraEdges(std::vector<uint16_t> above, std::vector<uint16_t> left,
                       uint16_t top_left, int bit_depth,
                       bool above_right_available, bool bottom_left_available)
    : above_(std::move(above)),
      left_(std::move(left)),
      top_left_(top_left),
      bit_depth_(bit_depth),
      above_right_available_(above_right_available),
      bottom_left_available_(bottom_left_available) {
  if (above_.empty() || left_.empty()) {
    throw std::invalid_argument("edges must not be empty");
  }
}

IntraEdges IntraEdges::Gather(const Plane& recon, const Rect& available, int x,
                              int y, BlockSize size) {
  CheckBlock(size);
  const int w = size.width;
  const int h = size.height;
  const uint16_t mid = static_cast<uint16_t>(1 << (recon.bit_depth() - 1));
  const bool has_above = y > available.y;
  const bool has_left = x > available.x;
  const int right_limit = available.x + available.width;    // exclusive
  const int bottom_limit = available.y + available.height;  // exclusive

  std::vector<uint16_t> above(2 * w);
  std::vector<uint16_t> left(2 * h);
  bool above_right = false;
  bool bottom_left = false;

  if (has_above) {
    for (int i = 0; i < 2 * w; ++i) {
      const int sx = Clamp(x + i, available.x, right_limit - 1);
      above[i] = recon.at(sx, y - 1);
    }
    above_right = x + w < right_limit;
  }
  if (has_left) {
    for (int i = 0; i < 2 * h; ++i) {
      const int sy = Clamp(y + i, available.y, bottom_limit - 1);
      left[i] = recon.at(x - 1, sy);
    }
    bottom_left = y + h < bottom_limit;
  }
  if (!has_above && has_left) std::fill(above.begin(), above.end(), left[0]);
  if (has_above && !has_left) std::fill(left.begin(), left.end(), above[0]);
  if (!has_above && !has_left) {
    std::fill(above.begin(), above.end(), mid);
    std::fill(left.begin(), left.end(), mid);
  }
  uint16_t top_left;
  if (has_above && has_left) {
    top_left = recon.at(x - 1, y - 1);
  } else if (has_above) {
    top_left = above[0];
  } else if (has_left) {
    top_left = left[0];
  } else {
    top_left = mid;
  }
  return IntraEdges(std::move(above), std::move(left), top_left,
                    recon.bit_depth(), above_right, bottom_left);
}

IntraEdges IntraEdges::Shifted(int delta) const {
  IntraEdges e = *this;
  for (auto& v : e.above_) v = static_cast<uint16_t>(v + delta);
  for (auto& v : e.left_) v = static_cast<uint16_t>(v + delta);
  e.top_left_ = static_cast<uint16_t>(e.top_left_ + delta);
  return e;
}

PixelGrid PredictDirectional(const IntraEdges& edges, DirectionalMode mode,
                             BlockSize size) {
  CheckBlock(size);
  if (mode.base_index < 0 || mode.base_index >= 8 ||
      std::abs(mode.angle_delta) > kMaxAngleDelta) {
    throw std::invalid_argument("illegal directional mode");
  }
  if ((size.width < 8 || size.height < 8) && mode.angle_delta != 0) {
    throw std::invalid_argument("angle delta not allowed below 8x8");
  }
  const int angle = mode.angle();
  const int w = size.width, h = size.height;
  PixelGrid out(w, h);

  if (angle == 90) {
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) out.at(c, r) = edges.above(c);
    }
    return out;
  }
  if (angle == 180) {
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) out.at(c, r) = edges.left(r);
    }
    return out;
  }

  const int d_above = angle < 90 || angle > 90 ? AboveSlopeQ6(angle) : 0;
  const int d_left = LeftSlopeQ6(angle);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (angle < 180) {
        const int pos = (c << 6) + (r + 1) * d_above;
        if (pos >= -64) {
          const int base = pos >> 6;
          const int frac = pos & 63;
          out.at(c, r) = Bilinear(edges.above(base), edges.above(base + 1), frac);
          continue;
        }
      }
      // Left-column projection (angles past the top-left corner and all
      // angles above 180 degrees).
      const int pos = (r << 6) + (c + 1) * d_left;
      const int base = std::max(pos >> 6, -1);
      const int frac = pos & 63;
      out.at(c, r) = Bilinear(edges.left(base), edges.left(base + 1), frac);
    }
  }
  return out;
}

PixelGrid PredictDc(const IntraEdges& edges, BlockSize size) {
  CheckBlock(size);
  const int w = size.width, h = size.height;
  int64_t sum = 0;
  for (int c = 0; c < w; ++c) sum += edges.above(c);
  for (int r = 0; r < h; ++r) sum += edges.left(r);
  const uint16_t dc = static_cast<uint16_t>((sum + (w + h) / 2) / (w + h));
  return PixelGrid(w, h, dc);
}

PixelGrid PredictSmooth(const IntraEdges& edges, SmoothVariant variant,
                        BlockSize size) {
  CheckBlock(size);
  const int w = size.width, h = size.height;
  const uint8_t* wx = SmoothWeights(w);
  const uint8_t* wy = SmoothWeights(h);
  const uint16_t tr = edges.above(w - 1);
  const uint16_t bl = edges.left(h - 1);
  PixelGrid out(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const uint32_t ph =
          (wx[c] * edges.left(r) + (256 - wx[c]) * tr + 128) >> 8;
      const uint32_t pv =
          (wy[r] * edges.above(c) + (256 - wy[r]) * bl + 128) >> 8;
      uint32_t v;
      switch (variant) {
        case SmoothVariant::kHorizontal: v = ph; break;
        case SmoothVariant::kVertical: v = pv; break;
        default: v = (ph + pv + 1) >> 1; break;
      }
      out.at(c, r) = static_cast<uint16_t>(v);
    }
  }
  return out;
}

PixelGrid PredictPaeth(const IntraEdges& edges, BlockSize size) {
  CheckBlock(size);
  const int w = size.width, h = size.height;
  PixelGrid out(w, h);
  const int tl = edges.top_left();
  for (int r = 0; r < h; ++r) {
    const int l = edges.left(r);
    for (int c = 0; c < w; ++c) {
      const int t = edges.above(c);
      const int base = t + l - tl;
      const int dt = std::abs(base - t);
      const int dl = std::abs(base - l);
      const int dtl = std::abs(base - tl);
      // Tie-break priority: T, then L, then TL.
      uint16_t v;
      if (dt <= dl && dt <= dtl) {
        v = static_cast<uint16_t>(t);
      } else if (dl <= dtl) {
        v = static_cast<uint16_t>(l);
      } else {
        v = static_cast<uint16_t>(tl);
      }
      out.at(c, r) = v;
    }
  }
  return out;
}

const RecursiveFilterCoeffs& RecursiveFilterSet(int set_index) {
  if (set_index < 0 || set_index >= kRecursiveFilterSets) {
    throw std::invalid_argument("recursive filter set index out of range");
  }
  return kRecursiveSets[set_index];
}

std::array<std::array<double, 7>, 8> RecursivePatchWeights(int set_index) {
  const RecursiveFilterCoeffs& cf = RecursiveFilterSet(set_index);
  const double a = cf.alpha_q6 / 64.0;
  const double b = cf.beta_q6 / 64.0;
  const double g = cf.gamma_q6 / 64.0;
  std::array<std::array<double, 7>, 8> weights{};
  // Run the recursion on each reference indicator; all values are dyadic so
  // the expansion is exact.
  for (int ref = 0; ref < 7; ++ref) {
    double p[7] = {};
    p[ref] = 1.0;
    // References: p0 corner, p1..p4 above, p5 left row 0, p6 left row 1.
    double cell[2][4];
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 4; ++c) {
        const double above = r == 0 ? p[1 + c] : cell[0][c];
        const double left = c == 0 ? p[5 + r] : cell[r][c - 1];
        const double above_left =
            r == 0 ? (c == 0 ? p[0] : p[c]) : (c == 0 ? p[5] : cell[0][c - 1]);
        cell[r][c] = a * above + b * left + g * above_left;
      }
    }
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 4; ++c) weights[r * 4 + c][ref] = cell[r][c];
    }
  }
  return weights;
}

PixelGrid PredictRecursiveFilter(const IntraEdges& edges, int set_index,
                                 BlockSize size) {
  CheckBlock(size);
  const auto weights = RecursivePatchWeights(set_index);
  const int w = size.width, h = size.height;
  const int hi = (1 << edges.bit_depth()) - 1;
  PixelGrid out(w, h);
  auto sample = [&](int c, int r) -> double {
    // A reference inside the block is an already-produced pixel; outside it
    // comes from the edges.
    if (r < 0) return edges.above(c);
    if (c < 0) return edges.left(r);
    return out.at(c, r);
  };
  for (int py = 0; py < h; py += 2) {
    for (int px = 0; px < w; px += 4) {
      const double p[7] = {sample(px - 1, py - 1), sample(px, py - 1),
                           sample(px + 1, py - 1), sample(px + 2, py - 1),
                           sample(px + 3, py - 1), sample(px - 1, py),
                           sample(px - 1, py + 1)};
      for (int i = 0; i < 8; ++i) {
        double acc = 0;
        for (int j = 0; j < 7; ++j) acc += weights[i][j] * p[j];
        const int v = static_cast<int>(std::floor(acc + 0.5));
        out.at(px + (i & 3), py + (i >> 2)) =
            static_cast<uint16_t>(Clamp(v, 0, hi));
      }
    }
  }
  return out;
}

PixelGrid PredictCfl(const PixelGrid& recon_luma_sub, const PixelGrid& dc_pred,
                     int scaling_q6, int bit_depth) {
  if (!recon_luma_sub.same_size(dc_pred)) {
    throw std::invalid_argument("CfL luma/DC dimension mismatch");
  }
  if (std::abs(scaling_q6) > 128) {
    throw std::invalid_argument("CfL scaling outside the signaled range");
  }
  const int w = recon_luma_sub.width(), h = recon_luma_sub.height();
  int64_t sum = 0;
  for (const auto& v : recon_luma_sub.data()) sum += v;
  const int n = w * h;
  const int32_t avg = static_cast<int32_t>((sum + n / 2) / n);
  PixelGrid out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int32_t ac = recon_luma_sub.at(x, y) - avg;
      const int32_t v = dc_pred.at(x, y) + RoundShift(int64_t{scaling_q6} * ac, 6);
      out.at(x, y) = ClampPixel(v, bit_depth);
    }
  }
  return out;
}

PixelGrid PaletteReconstruct(const Palette& palette) {
  const int k = static_cast<int>(palette.base_colors.size());
  if (k < kPaletteMinColors || k > kPaletteMaxColors) {
    throw std::invalid_argument("palette must hold 2 to 8 base colors");
  }
  PixelGrid out(palette.index_map.width(), palette.index_map.height());
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const uint8_t idx = palette.index_map.at(x, y);
      if (idx >= k) throw std::invalid_argument("palette index out of range");
      out.at(x, y) = palette.base_colors[idx];
    }
  }
  return out;
}

Palette PaletteFit(const PixelGrid& block, int k) {
  if (k < kPaletteMinColors || k > kPaletteMaxColors) {
    throw std::invalid_argument("palette must hold 2 to 8 base colors");
  }
  std::vector<uint16_t> sorted(block.data());
  std::sort(sorted.begin(), sorted.end());

  // Deterministic quantile seeding, then Lloyd iterations.
  std::vector<int64_t> centers(k);
  const size_t n = sorted.size();
  for (int i = 0; i < k; ++i) {
    centers[i] = sorted[(n - 1) * (2 * i + 1) / (2 * k)];
  }
  std::sort(centers.begin(), centers.end());
  auto nearest = [&](uint16_t v) {
    int best = 0;
    int64_t best_d = std::abs(int64_t{v} - centers[0]);
    for (int i = 1; i < k; ++i) {
      const int64_t d = std::abs(int64_t{v} - centers[i]);
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    return best;
  };
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<int64_t> sum(k, 0), count(k, 0);
    for (uint16_t v : sorted) {
      const int i = nearest(v);
      sum[i] += v;
      ++count[i];
    }
    bool changed = false;
    for (int i = 0; i < k; ++i) {
      if (count[i] == 0) continue;  // empty cluster keeps its center
      const int64_t c = (sum[i] + count[i] / 2) / count[i];
      changed |= c != centers[i];
      centers[i] = c;
    }
    std::sort(centers.begin(), centers.end());
    if (!changed) break;
  }

  Palette palette;
  palette.base_colors.resize(k);
  for (int i = 0; i < k; ++i) {
    palette.base_colors[i] = static_cast<uint16_t>(centers[i]);
  }
  // Final pass: every pixel takes its nearest base color of the fitted
  // palette.
  palette.index_map = Grid<uint8_t>(block.width(), block.height());
  for (int y = 0; y < block.height(); ++y) {
    for (int x = 0; x < block.width(); ++x) {
      palette.index_map.at(x, y) = static_cast<uint8_t>(nearest(block.at(x, y)));
    }
  }
  return palette;
}

PixelGrid IntraBcCopy(const Plane& recon, const Rect& coded_region,
                      MotionVector mv_fullpel, int x, int y, int width,
                      int height) {
  const int sub_x = recon.subsampling_x();
  const int sub_y = recon.subsampling_y();
  // Displacement on this plane in half-pel units of the plane's grid.
  const int dx2 = (mv_fullpel.col * 2) >> sub_x;
  const int dy2 = (mv_fullpel.row * 2) >> sub_y;
  const int ix = dx2 >> 1, fx = dx2 & 1;
  const int iy = dy2 >> 1, fy = dy2 & 1;

  const Rect source{x + ix, y + iy, width + (fx ? 1 : 0), height + (fy ? 1 : 0)};
  if (!coded_region.ContainsRect(source)) {
    throw std::invalid_argument(
        "intra block copy source overlaps uncoded samples");
  }
  PixelGrid out(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const int sx = x + c + ix;
      const int sy = y + r + iy;
      uint32_t v = recon.at(sx, sy);
      if (fx) v = (v + recon.at(sx + 1, sy) + 1) >> 1;
      if (fy) {
        uint32_t lower = recon.at(sx, sy + 1);
        if (fx) lower = (lower + recon.at(sx + 1, sy + 1) + 1) >> 1;
        v = (v + lower + 1) >> 1;
      }
      out.at(c, r) = static_cast<uint16_t>(v);
    }
  }
  return out;
}

}  // namespace av1lab
