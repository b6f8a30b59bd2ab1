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

#include "av1lab/partition.h"

namespace av1lab {

PartitionTree PartitionTree::Split(PartitionTree tl, PartitionTree tr,
                                   PartitionTree bl, PartitionTree br) {
  std::vector<PartitionTree> children;
  children.reserve(4);
  children.push_back(std::move(tl));
  children.push_back(std::move(tr));
  children.push_back(std::move(bl));
  children.push_back(std::move(br));
  return PartitionTree(PartitionType::kSplit, std::move(children));
}

bool PartitionTypeAllowed(PartitionType type, int dim) {
  if (!IsValidBlockDim(dim) || dim > kMaxBlockDim) return false;
  switch (type) {
    case PartitionType::kNone:
      return true;
    case PartitionType::kHorz:
    case PartitionType::kVert:
    case PartitionType::kSplit:
      return dim >= 8;
    case PartitionType::kHorzA:
    case PartitionType::kHorzB:
    case PartitionType::kVertA:
    case PartitionType::kVertB:
      return dim >= 16;
    case PartitionType::kHorz4:
    case PartitionType::kVert4:
      return dim >= 16 && dim <= 64;
  }
  return false;
}

std::vector<BlockGeometry> PartitionPieces(PartitionType type, int x, int y,
                                           int dim) {
  const int h = dim / 2;
  const int q = dim / 4;
  auto piece = [](int px, int py, int w, int hh) {
    BlockGeometry g;
    g.x = px;
    g.y = py;
    g.size = BlockSize{w, hh};
    g.visible = Rect{px, py, w, hh};
    return g;
  };
  switch (type) {
    case PartitionType::kNone:
      return {piece(x, y, dim, dim)};
    case PartitionType::kHorz:
      return {piece(x, y, dim, h), piece(x, y + h, dim, h)};
    case PartitionType::kVert:
      return {piece(x, y, h, dim), piece(x + h, y, h, dim)};
    case PartitionType::kSplit:
      return {piece(x, y, h, h), piece(x + h, y, h, h), piece(x, y + h, h, h),
              piece(x + h, y + h, h, h)};
    case PartitionType::kHorzA:
      return {piece(x, y, h, h), piece(x + h, y, h, h),
              piece(x, y + h, dim, h)};
    case PartitionType::kHorzB:
      return {piece(x, y, dim, h), piece(x, y + h, h, h),
              piece(x + h, y + h, h, h)};
    case PartitionType::kVertA:
      return {piece(x, y, h, h), piece(x, y + h, h, h),
              piece(x + h, y, h, dim)};
    case PartitionType::kVertB:
      return {piece(x, y, h, dim), piece(x + h, y, h, h),
              piece(x + h, y + h, h, h)};
    case PartitionType::kHorz4:
      return {piece(x, y, dim, q), piece(x, y + q, dim, q),
              piece(x, y + 2 * q, dim, q), piece(x, y + 3 * q, dim, q)};
    case PartitionType::kVert4:
      return {piece(x, y, q, dim), piece(x + q, y, q, dim),
              piece(x + 2 * q, y, q, dim), piece(x + 3 * q, y, q, dim)};
  }
  return {};
}

namespace {

bool ValidateNode(const PartitionTree& node, int dim) {
  if (!PartitionTypeAllowed(node.type(), dim)) return false;
  if (node.type() != PartitionType::kSplit) {
    // Recursion happens only through square split nodes.
    return node.children().empty();
  }
  if (node.children().size() != 4) return false;
  for (const PartitionTree& child : node.children()) {
    if (!ValidateNode(child, dim / 2)) return false;
  }
  return true;
}

void CollectLeaves(const PartitionTree& node, int x, int y, int dim,
                   int frame_width, int frame_height,
                   std::vector<BlockGeometry>* out) {
  if (node.type() == PartitionType::kSplit) {
    const int h = dim / 2;
    CollectLeaves(node.children()[0], x, y, h, frame_width, frame_height, out);
    CollectLeaves(node.children()[1], x + h, y, h, frame_width, frame_height,
                  out);
    CollectLeaves(node.children()[2], x, y + h, h, frame_width, frame_height,
                  out);
    CollectLeaves(node.children()[3], x + h, y + h, h, frame_width,
                  frame_height, out);
    return;
  }
  for (BlockGeometry g : PartitionPieces(node.type(), x, y, dim)) {
    g.visible = Rect{g.x, g.y, Clamp(frame_width - g.x, 0, g.size.width),
                     Clamp(frame_height - g.y, 0, g.size.height)};
    out->push_back(g);
  }
}

}  // namespace

bool ValidatePartitionTree(const PartitionTree& tree, int sb_size) {
  if (sb_size != 64 && sb_size != 128) {
    throw std::invalid_argument("superblock size must be 64 or 128");
  }
  return ValidateNode(tree, sb_size);
}

std::vector<BlockGeometry> PartitionLeaves(const PartitionTree& tree, int sb_x,
                                           int sb_y, int sb_size,
                                           int frame_width, int frame_height) {
  std::vector<BlockGeometry> leaves;
  CollectLeaves(tree, sb_x, sb_y, sb_size, frame_width, frame_height, &leaves);
  return leaves;
}

ChromaPlan ChromaCodingUnits4x4(std::span<const LumaBlockInfo> luma_blocks) {
  if (luma_blocks.size() != 4) {
    throw std::invalid_argument(
        "chroma 4x4 rule needs the four luma blocks covering a full 8x8 area");
  }
  bool all_inter = true;
  for (const LumaBlockInfo& b : luma_blocks) {
    all_inter &= b.is_inter;
  }
  if (all_inter) {
    ChromaInter2x2Plan plan;
    for (int i = 0; i < 4; ++i) plan.unit_mvs[i] = luma_blocks[i].mv;
    return plan;
  }
  // Any intra luma block: a single 4x4 chroma unit following the
  // bottom-right luma block's mode.
  return ChromaIntra4x4Plan{luma_blocks[3].mode};
}

}  // namespace av1lab
