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

#ifndef AV1LAB_PARTITION_H_
#define AV1LAB_PARTITION_H_

#include <array>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "av1lab/block.h"
#include "av1lab/interp.h"

namespace av1lab {

// The ten ways a square block can be carved up. Only kSplit recurses; every
// other option produces leaf coding blocks.
enum class PartitionType : uint8_t {
  kNone,    // one W x H block
  kHorz,    // two W x H/2
  kVert,    // two W/2 x H
  kSplit,   // four W/2 x H/2, recursive
  kHorzA,   // two W/2 x H/2 on top, one W x H/2 below
  kHorzB,   // one W x H/2 on top, two W/2 x H/2 below
  kVertA,   // two W/2 x H/2 on the left, one W/2 x H on the right
  kVertB,   // one W/2 x H on the left, two W/2 x H/2 on the right
  kHorz4,   // four W x H/4 strips
  kVert4,   // four W/4 x H strips
};

// Immutable after construction; built top-down. Children exist only for
// kSplit nodes, in raster order (TL, TR, BL, BR).
class PartitionTree {
 public:
  explicit PartitionTree(PartitionType type) : type_(type) {}
  PartitionTree(PartitionType type, std::vector<PartitionTree> children)
      : type_(type), children_(std::move(children)) {}

  static PartitionTree Leaf() { return PartitionTree(PartitionType::kNone); }
  static PartitionTree Split(PartitionTree tl, PartitionTree tr,
                             PartitionTree bl, PartitionTree br);

  PartitionType type() const { return type_; }
  const std::vector<PartitionTree>& children() const { return children_; }

 private:
  PartitionType type_;
  std::vector<PartitionTree> children_;
};

// True iff `type` is an allowed partition choice for a square block of the
// given dimension: 8x8 blocks allow only none/horz/vert/split, 128x128
// blocks exclude the 4-way strips, and all children must come out >= 4x4.
bool PartitionTypeAllowed(PartitionType type, int dim);

// The sub-block layout produced by one partition choice at a square block.
std::vector<BlockGeometry> PartitionPieces(PartitionType type, int x, int y,
                                           int dim);

// Validates a whole tree against the partition rule set. `sb_size` must be
// 64 or 128 (throws std::invalid_argument otherwise); any rule violation in
// the tree itself returns false.
bool ValidatePartitionTree(const PartitionTree& tree, int sb_size);

// Leaf coding blocks of a valid tree in encode order, clipped against the
// frame bounds. The superblock's top-left corner is (sb_x, sb_y).
std::vector<BlockGeometry> PartitionLeaves(const PartitionTree& tree, int sb_x,
                                           int sb_y, int sb_size,
                                           int frame_width, int frame_height);

// ---- Constrained chroma coding for 4x4 luma blocks (4:2:0) -----------------

using IntraModeId = uint8_t;

struct LumaBlockInfo {
  bool is_inter = false;
  MotionVector mv;           // valid when is_inter
  IntraModeId mode = 0;      // valid when !is_inter
};

// Chroma predicted in 2x2 units, one motion vector per unit derived from the
// corresponding 4x4 luma block (raster order TL, TR, BL, BR).
struct ChromaInter2x2Plan {
  std::array<MotionVector, 4> unit_mvs;
};

// A single 4x4 chroma unit following the bottom-right luma block's intra
// mode; its residual is coded with a 4x4 transform.
struct ChromaIntra4x4Plan {
  IntraModeId mode = 0;
};

using ChromaPlan = std::variant<ChromaInter2x2Plan, ChromaIntra4x4Plan>;

// Applies the constrained chroma rule to an 8x8 luma area fully covered by
// four 4x4 blocks (raster order). Throws std::invalid_argument unless
// exactly four blocks are supplied.
ChromaPlan ChromaCodingUnits4x4(std::span<const LumaBlockInfo> luma_blocks);

}  // namespace av1lab

#endif  // AV1LAB_PARTITION_H_
