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

#ifndef AV1LAB_COMMON_H_
#define AV1LAB_COMMON_H_

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace av1lab {

// Thrown when a byte stream handed to a decode routine is malformed or
// truncated. API misuse (broken preconditions) throws std::invalid_argument.
class DecodeError : public std::runtime_error {
 public:
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Round-half-up shift, arithmetic for negative values: (-3 + 2) >> 2 == -1,
// i.e. half values round toward +infinity. This is the rounding contract used
// throughout the fixed-point pipelines.
constexpr int32_t RoundShift(int64_t value, int bits) {
  assert(bits >= 0);
  if (bits == 0) return static_cast<int32_t>(value);
  return static_cast<int32_t>((value + (int64_t{1} << (bits - 1))) >> bits);
}

// Round-half-away-from-zero division by an arbitrary positive divisor.
constexpr int64_t RoundDivide(int64_t num, int64_t den) {
  assert(den > 0);
  return num >= 0 ? (num + den / 2) / den : -((-num + den / 2) / den);
}

constexpr int FloorLog2(uint32_t v) {
  assert(v > 0);
  int n = -1;
  while (v != 0) {
    v >>= 1;
    ++n;
  }
  return n;
}

template <typename T>
constexpr T Clamp(T v, T lo, T hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

constexpr uint16_t ClampPixel(int32_t v, int bit_depth) {
  const int32_t hi = (1 << bit_depth) - 1;
  return static_cast<uint16_t>(v < 0 ? 0 : (v > hi ? hi : v));
}

struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool Contains(int px, int py) const {
    return px >= x && px < x + width && py >= y && py < y + height;
  }
  bool ContainsRect(const Rect& r) const {
    return r.x >= x && r.y >= y && r.x + r.width <= x + width &&
           r.y + r.height <= y + height;
  }
  bool operator==(const Rect&) const = default;
};

// Row-major 2-D array. The workhorse container for pixel blocks, residuals,
// coefficients and masks.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height),
        data_(static_cast<size_t>(width) * height, fill) {
    assert(width >= 0 && height >= 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return data_.size(); }

  T& at(int x, int y) {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return data_[static_cast<size_t>(y) * width_ + x];
  }
  const T& at(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return data_[static_cast<size_t>(y) * width_ + x];
  }

  // Clamped read: coordinates outside the grid replicate the nearest sample.
  const T& at_clamped(int x, int y) const {
    return at(Clamp(x, 0, width_ - 1), Clamp(y, 0, height_ - 1));
  }

  T* row(int y) { return &data_[static_cast<size_t>(y) * width_]; }
  const T* row(int y) const { return &data_[static_cast<size_t>(y) * width_]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  bool same_size(const Grid& o) const {
    return width_ == o.width_ && height_ == o.height_;
  }
  bool operator==(const Grid&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using PixelGrid = Grid<uint16_t>;

}  // namespace av1lab

#endif  // AV1LAB_COMMON_H_
