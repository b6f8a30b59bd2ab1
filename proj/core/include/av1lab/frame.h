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

#ifndef AV1LAB_FRAME_H_
#define AV1LAB_FRAME_H_

#include <optional>

#include "av1lab/common.h"

namespace av1lab {

enum class ChromaFormat : uint8_t {
  kMonochrome,  // 4:0:0
  k420,         // 4:2:0
  k422,         // 4:2:2
  k444,         // 4:4:4
};

int SubsamplingX(ChromaFormat format);
int SubsamplingY(ChromaFormat format);
const char* ChromaFormatName(ChromaFormat format);

// One plane of samples. Samples are stored one integer per sample for all of
// 8-, 10- and 12-bit content; 8-bit content is not packed.
class Plane {
 public:
  Plane() = default;
  // Throws std::invalid_argument on empty dimensions or an unsupported depth.
  Plane(int width, int height, int bit_depth, int subsampling_x = 0,
        int subsampling_y = 0);

  int width() const { return samples_.width(); }
  int height() const { return samples_.height(); }
  int bit_depth() const { return bit_depth_; }
  int subsampling_x() const { return subsampling_x_; }
  int subsampling_y() const { return subsampling_y_; }
  uint16_t max_value() const {
    return static_cast<uint16_t>((1 << bit_depth_) - 1);
  }

  uint16_t at(int x, int y) const { return samples_.at(x, y); }
  uint16_t& at(int x, int y) { return samples_.at(x, y); }
  uint16_t at_clamped(int x, int y) const { return samples_.at_clamped(x, y); }

  PixelGrid& samples() { return samples_; }
  const PixelGrid& samples() const { return samples_; }

  // True iff every sample is below 2^bit_depth.
  bool SamplesInRange() const;

  bool operator==(const Plane&) const = default;

 private:
  PixelGrid samples_;
  int bit_depth_ = 8;
  int subsampling_x_ = 0;
  int subsampling_y_ = 0;
};

class Frame {
 public:
  Frame() = default;
  // Builds the luma plane plus chroma planes sized per the format's
  // subsampling factors. Throws std::invalid_argument for bad geometry.
  Frame(int width, int height, int bit_depth, ChromaFormat format);

  int width() const { return y_.width(); }
  int height() const { return y_.height(); }
  int bit_depth() const { return y_.bit_depth(); }
  ChromaFormat format() const { return format_; }
  bool has_chroma() const { return format_ != ChromaFormat::kMonochrome; }
  int plane_count() const { return has_chroma() ? 3 : 1; }

  Plane& y() { return y_; }
  const Plane& y() const { return y_; }
  Plane& u() { return *u_; }
  const Plane& u() const { return *u_; }
  Plane& v() { return *v_; }
  const Plane& v() const { return *v_; }

  Plane& plane(int i);
  const Plane& plane(int i) const;

  bool operator==(const Frame&) const = default;

 private:
  Plane y_;
  std::optional<Plane> u_;
  std::optional<Plane> v_;
  ChromaFormat format_ = ChromaFormat::kMonochrome;
};

}  // namespace av1lab

#endif  // AV1LAB_FRAME_H_
