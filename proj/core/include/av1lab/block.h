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

#ifndef AV1LAB_BLOCK_H_
#define AV1LAB_BLOCK_H_

#include "av1lab/common.h"

namespace av1lab {

constexpr int kMinBlockDim = 4;
constexpr int kMaxBlockDim = 128;

// Luma dimensions of a coding block. Each dimension is a power of two in
// [4, 128] and the aspect ratio is one of 1:1, 1:2, 2:1, 1:4, 4:1.
struct BlockSize {
  int width = 0;
  int height = 0;

  constexpr bool operator==(const BlockSize&) const = default;
  constexpr int area() const { return width * height; }
  constexpr int min_dim() const { return width < height ? width : height; }
  constexpr int max_dim() const { return width > height ? width : height; }
};

constexpr bool IsValidBlockDim(int d) {
  return d >= kMinBlockDim && d <= kMaxBlockDim && (d & (d - 1)) == 0;
}

constexpr bool IsValidBlockSize(BlockSize b) {
  if (!IsValidBlockDim(b.width) || !IsValidBlockDim(b.height)) return false;
  const int ratio = b.max_dim() / b.min_dim();
  return ratio == 1 || ratio == 2 || ratio == 4;
}

// Position and nominal size of a coding block, plus the part of it that is
// visible inside the frame. Blocks straddling the right/bottom frame edge
// keep their nominal size; `visible` is the clipped rectangle.
struct BlockGeometry {
  int x = 0;
  int y = 0;
  BlockSize size;
  Rect visible;

  bool operator==(const BlockGeometry&) const = default;
};

inline BlockGeometry MakeBlockGeometry(int x, int y, BlockSize size,
                                       int frame_width, int frame_height) {
  BlockGeometry g;
  g.x = x;
  g.y = y;
  g.size = size;
  g.visible = Rect{x, y, Clamp(frame_width - x, 0, size.width),
                   Clamp(frame_height - y, 0, size.height)};
  return g;
}

}  // namespace av1lab

#endif  // AV1LAB_BLOCK_H_
