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

#include "av1lab/compound.h"

#include <cmath>

namespace av1lab {
namespace {

void CheckSameSize(const PixelGrid& a, const PixelGrid& b) {
  if (!a.same_size(b)) throw std::invalid_argument("block dimension mismatch");
}

// Decaying inter-intra weight: 60 at the boundary, geometric falloff with a
// floor of 4 (64ths).
int InterIntraWeight1D(int i) {
  double w = 60.0 * std::pow(2.0, -i / 8.0);
  return std::max(4, static_cast<int>(std::lround(w)));
}

}  // namespace

int MaskDistanceWeight(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("frame distances must be >= 1");
  if (d1 > d2) return kMaskMax - MaskDistanceWeight(d2, d1);
  // d1 <= d2: the first reference is the near one.
  if (2 * d2 < 3 * d1) return 36;   // d2 < 1.5 d1
  if (2 * d2 < 5 * d1) return 44;   // d2 < 2.5 d1
  if (2 * d2 < 7 * d1) return 48;   // d2 < 3.5 d1
  return 52;
}

CompoundMask MaskDifferenceWeight(const PixelGrid& r1, const PixelGrid& r2,
                                  int sign) {
  CheckSameSize(r1, r2);
  CompoundMask m(r1.width(), r1.height());
  for (int y = 0; y < r1.height(); ++y) {
    for (int x = 0; x < r1.width(); ++x) {
      const int diff = std::abs(int{r1.at(x, y)} - int{r2.at(x, y)});
      int w = 38 + diff / 16;
      if (sign) w = kMaskMax - w;
      m.at(x, y) = static_cast<uint8_t>(Clamp(w, 0, kMaskMax));
    }
  }
  return m;
}

PixelGrid BlendCompound(const PixelGrid& r1, const PixelGrid& r2,
                        const CompoundMask& mask, int bit_depth) {
  CheckSameSize(r1, r2);
  if (mask.width() != r1.width() || mask.height() != r1.height()) {
    throw std::invalid_argument("mask dimension mismatch");
  }
  PixelGrid out(r1.width(), r1.height());
  for (int y = 0; y < r1.height(); ++y) {
    for (int x = 0; x < r1.width(); ++x) {
      const int m = mask.at(x, y);
      const int32_t v =
          RoundShift(m * int32_t{r1.at(x, y)} + (kMaskMax - m) * int32_t{r2.at(x, y)}, 6);
      out.at(x, y) = ClampPixel(v, bit_depth);
    }
  }
  return out;
}

bool WedgeEligible(BlockSize size) {
  return IsValidBlockSize(size) && size.min_dim() >= 8 && size.max_dim() <= 32;
}

std::vector<CompoundMask> WedgeMasks(BlockSize size) {
  if (!WedgeEligible(size)) {
    throw std::invalid_argument("block size not eligible for wedge masks");
  }
  const int w = size.width, h = size.height;
  std::vector<CompoundMask> masks;
  masks.reserve(16);
  // Split line through the anchor just past the block center so the
  // axis-aligned orientations carry the 32-valued transition on a sample
  // column/row; ramp slope 32 per pixel of signed distance.
  const double ax = w / 2.0 + 0.5;
  const double ay = h / 2.0 + 0.5;
  for (int k = 0; k < 8; ++k) {
    const double phi = k * M_PI / 8.0;
    const double nx = std::cos(phi), ny = std::sin(phi);
    CompoundMask m(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double d = (x + 0.5 - ax) * nx + (y + 0.5 - ay) * ny;
        const int v = 32 - static_cast<int>(std::lround(32.0 * d));
        m.at(x, y) = static_cast<uint8_t>(Clamp(v, 0, kMaskMax));
      }
    }
    masks.push_back(std::move(m));
  }
  for (int k = 0; k < 8; ++k) {
    CompoundMask m(w, h);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        m.at(x, y) = static_cast<uint8_t>(kMaskMax - masks[k].at(x, y));
      }
    }
    masks.push_back(std::move(m));
  }
  return masks;
}

int ObmcWeight(int i, int n) {
  const double m = 64.0 * (0.5 * std::sin(M_PI / n * (i + 0.5)) + 0.5);
  return static_cast<int>(std::floor(m + 0.5));
}

PixelGrid ObmcBlend(const PixelGrid& pred,
                    std::span<const ObmcNeighbor> above_neighbors,
                    std::span<const ObmcNeighbor> left_neighbors,
                    int bit_depth) {
  if (above_neighbors.size() > 4 || left_neighbors.size() > 4) {
    throw std::invalid_argument("at most 4 overlapped neighbors per side");
  }
  const int w = pred.width(), h = pred.height();
  PixelGrid out = pred;
  // Above pass over the top half: the current prediction keeps weight m(y).
  for (const ObmcNeighbor& nb : above_neighbors) {
    for (int y = 0; y < h / 2; ++y) {
      const int m = ObmcWeight(y, h);
      for (int c = 0; c < nb.extent && nb.offset + c < w; ++c) {
        const int x = nb.offset + c;
        const int32_t v =
            RoundShift(m * int32_t{out.at(x, y)} +
                           (kMaskMax - m) * int32_t{nb.pred.at(c, y)}, 6);
        out.at(x, y) = ClampPixel(v, bit_depth);
      }
    }
  }
  // Left pass over the left half with the column-indexed weights.
  for (const ObmcNeighbor& nb : left_neighbors) {
    for (int x = 0; x < w / 2; ++x) {
      const int m = ObmcWeight(x, w);
      for (int r = 0; r < nb.extent && nb.offset + r < h; ++r) {
        const int y = nb.offset + r;
        const int32_t v =
            RoundShift(m * int32_t{out.at(x, y)} +
                           (kMaskMax - m) * int32_t{nb.pred.at(x, r)}, 6);
        out.at(x, y) = ClampPixel(v, bit_depth);
      }
    }
  }
  return out;
}

CompoundMask InterIntraMask(InterIntraMode mode, BlockSize size) {
  const int w = size.width, h = size.height;
  CompoundMask m(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int v;
      switch (mode) {
        case InterIntraMode::kDc: v = 32; break;
        case InterIntraMode::kVertical: v = InterIntraWeight1D(y); break;
        case InterIntraMode::kHorizontal: v = InterIntraWeight1D(x); break;
        default: v = InterIntraWeight1D(std::min(x, y)); break;
      }
      m.at(x, y) = static_cast<uint8_t>(v);
    }
  }
  return m;
}

PixelGrid InterIntraBlend(const PixelGrid& inter, const PixelGrid& intra,
                          InterIntraMode mode, int bit_depth) {
  CheckSameSize(inter, intra);
  const CompoundMask mask =
      InterIntraMask(mode, BlockSize{inter.width(), inter.height()});
  return BlendCompound(intra, inter, mask, bit_depth);
}

PixelGrid InterIntraBlendWedge(const PixelGrid& inter, const PixelGrid& intra,
                               int wedge_index, int bit_depth) {
  CheckSameSize(inter, intra);
  if (wedge_index < 0 || wedge_index >= 16) {
    throw std::invalid_argument("wedge index out of range");
  }
  const auto masks = WedgeMasks(BlockSize{inter.width(), inter.height()});
  return BlendCompound(intra, inter, masks[wedge_index], bit_depth);
}

}  // namespace av1lab
