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

#include "av1lab/frame.h"

namespace av1lab {

int SubsamplingX(ChromaFormat format) {
  switch (format) {
    case ChromaFormat::k420:
    case ChromaFormat::k422:
      return 1;
    default:
      return 0;
  }
}

int SubsamplingY(ChromaFormat format) {
  return format == ChromaFormat::k420 ? 1 : 0;
}

const char* ChromaFormatName(ChromaFormat format) {
  switch (format) {
    case ChromaFormat::kMonochrome: return "4:0:0";
    case ChromaFormat::k420: return "4:2:0";
    case ChromaFormat::k422: return "4:2:2";
    case ChromaFormat::k444: return "4:4:4";
  }
  return "?";
}

Plane::Plane(int width, int height, int bit_depth, int subsampling_x,
             int subsampling_y)
    : samples_(width > 0 && height > 0 ? PixelGrid(width, height) : PixelGrid()),
      bit_depth_(bit_depth),
      subsampling_x_(subsampling_x),
      subsampling_y_(subsampling_y) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("Plane dimensions must be >= 1");
  }
  if (bit_depth != 8 && bit_depth != 10 && bit_depth != 12) {
    throw std::invalid_argument("bit depth must be 8, 10 or 12");
  }
  if ((subsampling_x | subsampling_y) & ~1) {
    throw std::invalid_argument("subsampling factors must be 0 or 1");
  }
}

bool Plane::SamplesInRange() const {
  const uint16_t hi = max_value();
  for (uint16_t s : samples_.data()) {
    if (s > hi) return false;
  }
  return true;
}

Frame::Frame(int width, int height, int bit_depth, ChromaFormat format)
    : y_(width, height, bit_depth), format_(format) {
  if (format == ChromaFormat::kMonochrome) return;
  const int sx = SubsamplingX(format);
  const int sy = SubsamplingY(format);
  if ((sx && (width & 1)) || (sy && (height & 1))) {
    throw std::invalid_argument("subsampled dimensions must be even");
  }
  u_.emplace(width >> sx, height >> sy, bit_depth, sx, sy);
  v_.emplace(width >> sx, height >> sy, bit_depth, sx, sy);
}

Plane& Frame::plane(int i) {
  return const_cast<Plane&>(static_cast<const Frame*>(this)->plane(i));
}

const Plane& Frame::plane(int i) const {
  switch (i) {
    case 0: return y_;
    case 1: return *u_;
    case 2: return *v_;
    default: throw std::invalid_argument("plane index out of range");
  }
}

}  // namespace av1lab
