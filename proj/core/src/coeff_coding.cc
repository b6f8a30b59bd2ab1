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

#include "av1lab/coeff_coding.h"

#include <algorithm>

namespace av1lab {
namespace {

constexpr int kEobClasses = 14;  // enough for end positions up to 4096

struct Offset {
  int dx, dy;
};
constexpr Offset kBrNeighbors2D[5] = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
constexpr Offset kLrNeighbors2D[3] = {{1, 0}, {0, 1}, {1, 1}};

int NeighborSum(const Grid<int32_t>& levels, int x, int y,
                std::span<const Offset> offsets) {
  int sum = 0;
  for (const Offset& o : offsets) {
    const int nx = x + o.dx, ny = y + o.dy;
    if (nx < levels.width() && ny < levels.height()) {
      sum += std::abs(levels.at(nx, ny));
    }
  }
  return sum;
}

int DirectionalSum(const Grid<int32_t>& levels, int x, int y, ScanKind kind,
                   int count) {
  int sum = 0;
  for (int i = 1; i <= count; ++i) {
    const int nx = kind == ScanKind::kRow ? x + i : x;
    const int ny = kind == ScanKind::kColumn ? y + i : y;
    if (nx < levels.width() && ny < levels.height()) {
      sum += std::abs(levels.at(nx, ny));
    }
  }
  return sum;
}

int EobClass(int eob) {
  if (eob <= 2) return eob;
  return FloorLog2(static_cast<uint32_t>(eob - 1)) + 2;
}

void EncodeExpGolomb(SymbolEncoder& enc, uint32_t v) {
  const uint32_t z = v + 1;
  const int nbits = FloorLog2(z);
  for (int i = 0; i < nbits; ++i) enc.EncodeBitUniform(0);
  for (int i = nbits; i >= 0; --i) enc.EncodeBitUniform((z >> i) & 1);
}

uint32_t DecodeExpGolomb(SymbolDecoder& dec) {
  int nbits = 0;
  while (dec.DecodeBitUniform() == 0) {
    if (++nbits > 31) throw DecodeError("malformed Exp-Golomb code");
  }
  uint32_t z = 1;
  for (int i = 0; i < nbits; ++i) z = (z << 1) | dec.DecodeBitUniform();
  return z - 1;
}

}  // namespace

ScanKind ScanKindFor(TxKernel vertical, TxKernel horizontal) {
  const bool v_id = vertical == TxKernel::kIdentity;
  const bool h_id = horizontal == TxKernel::kIdentity;
  if (!v_id && h_id) return ScanKind::kColumn;  // 1-D vertical transform
  if (v_id && !h_id) return ScanKind::kRow;     // 1-D horizontal transform
  return ScanKind::kZigZag;
}

std::vector<uint16_t> BuildScanOrder(ScanKind kind, TxSize size) {
  if (!IsValidTxSize(size)) throw std::invalid_argument("invalid tx size");
  const int w = size.width, h = size.height;
  std::vector<uint16_t> scan;
  scan.reserve(static_cast<size_t>(w) * h);
  switch (kind) {
    case ScanKind::kRow:
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) scan.push_back(static_cast<uint16_t>(y * w + x));
      }
      break;
    case ScanKind::kColumn:
      for (int x = 0; x < w; ++x) {
        for (int y = 0; y < h; ++y) scan.push_back(static_cast<uint16_t>(y * w + x));
      }
      break;
    case ScanKind::kZigZag:
      // Anti-diagonals with alternating direction; the first step goes right.
      for (int d = 0; d <= w + h - 2; ++d) {
        if (d & 1) {
          for (int y = std::max(0, d - w + 1); y <= std::min(d, h - 1); ++y) {
            scan.push_back(static_cast<uint16_t>(y * w + (d - y)));
          }
        } else {
          for (int y = std::min(d, h - 1); y >= std::max(0, d - w + 1); --y) {
            scan.push_back(static_cast<uint16_t>(y * w + (d - y)));
          }
        }
      }
      break;
  }
  return scan;
}

LevelSymbols DecomposeLevel(int32_t v) {
  LevelSymbols s;
  s.negative = v < 0;
  const int64_t a = std::abs(int64_t{v});
  s.br = static_cast<int>(std::min<int64_t>(a, 3));
  if (a <= 2) return s;
  int64_t rem = a - 3;
  for (int t = 0; t < kMaxLrSteps; ++t) {
    const int lr = static_cast<int>(std::min<int64_t>(rem, 3));
    s.lrs.push_back(lr);
    if (lr < 3) return s;
    rem -= 3;
  }
  s.hr = static_cast<int32_t>(a - kLevelCascadeCap);
  return s;
}

int32_t ReassembleLevel(const LevelSymbols& s) {
  int64_t a = s.br;
  for (int lr : s.lrs) a += lr;
  if (!s.lrs.empty() && s.lrs.size() == kMaxLrSteps && s.lrs.back() == 3) {
    a = kLevelCascadeCap + s.hr;
  }
  return static_cast<int32_t>(s.negative ? -a : a);
}

int BrContext(const Grid<int32_t>& levels, int x, int y, ScanKind kind) {
  const int sum = kind == ScanKind::kZigZag
                      ? NeighborSum(levels, x, y, kBrNeighbors2D)
                      : DirectionalSum(levels, x, y, kind, 3);
  return std::min((sum + 1) >> 1, kBrContexts - 1);
}

int LrContext(const Grid<int32_t>& levels, int x, int y, ScanKind kind) {
  const int sum = kind == ScanKind::kZigZag
                      ? NeighborSum(levels, x, y, kLrNeighbors2D)
                      : DirectionalSum(levels, x, y, kind, 3);
  return std::min((sum + 1) >> 1, kLrContexts - 1);
}

CoeffModels::CoeffModels()
    : eob_class(kEobClasses),
      br(kBrContexts, CdfModel(kBrSymbols)),
      br_last(kBrContexts, CdfModel(kBrSymbols - 1)),
      lr(kLrContexts, CdfModel(kLrSymbols)),
      dc_sign(kDcSignContexts, CdfModel(2)) {}

void CoeffEncode(SymbolEncoder& enc, CoeffModels& models,
                 const Grid<int32_t>& levels, TxKernel vertical,
                 TxKernel horizontal, int dc_sign_context) {
  const TxSize size{levels.width(), levels.height()};
  const ScanKind kind = ScanKindFor(vertical, horizontal);
  const std::vector<uint16_t> scan = BuildScanOrder(kind, size);
  const int n = static_cast<int>(scan.size());

  int eob = 0;
  for (int i = 0; i < n; ++i) {
    if (levels.data()[scan[i]] != 0) eob = i + 1;
  }

  const int cls = EobClass(eob);
  enc.EncodeAdaptive(models.eob_class, cls);
  if (cls >= 3) {
    const int k = cls - 2;
    enc.EncodeLiteral(static_cast<uint32_t>(eob - 1 - (1 << k)), k);
  }

  for (int i = eob - 1; i >= 0; --i) {
    const int x = scan[i] % size.width;
    const int y = scan[i] / size.width;
    const int32_t v = levels.data()[scan[i]];
    const LevelSymbols sym = DecomposeLevel(v);
    if (i == eob - 1) {
      // Zero is ruled out for the last non-zero coefficient.
      enc.EncodeAdaptive(models.br_last[BrContext(levels, x, y, kind)],
                         sym.br - 1);
    } else {
      enc.EncodeAdaptive(models.br[BrContext(levels, x, y, kind)], sym.br);
    }
    if (sym.br == 3) {
      const int lr_ctx = LrContext(levels, x, y, kind);
      for (int lr : sym.lrs) enc.EncodeAdaptive(models.lr[lr_ctx], lr);
      if (static_cast<int>(sym.lrs.size()) == kMaxLrSteps &&
          sym.lrs.back() == 3) {
        EncodeExpGolomb(enc, static_cast<uint32_t>(sym.hr - 1));
      }
    }
  }

  // DC sign is context coded; AC signs travel as one packed run of raw bits.
  if (eob > 0 && levels.data()[scan[0]] != 0 && scan[0] == 0) {
    enc.EncodeAdaptive(models.dc_sign[dc_sign_context],
                       levels.data()[0] < 0 ? 1 : 0);
  }
  for (int i = 0; i < eob; ++i) {
    if (scan[i] == 0) continue;
    const int32_t v = levels.data()[scan[i]];
    if (v != 0) enc.EncodeBitUniform(v < 0 ? 1 : 0);
  }
}

Grid<int32_t> CoeffDecode(SymbolDecoder& dec, CoeffModels& models, TxSize size,
                          TxKernel vertical, TxKernel horizontal,
                          int dc_sign_context) {
  const ScanKind kind = ScanKindFor(vertical, horizontal);
  const std::vector<uint16_t> scan = BuildScanOrder(kind, size);
  const int n = static_cast<int>(scan.size());
  Grid<int32_t> levels(size.width, size.height, 0);

  const int cls = dec.DecodeAdaptive(models.eob_class);
  int eob = cls;
  if (cls >= 3) {
    const int k = cls - 2;
    eob = (1 << k) + 1 + static_cast<int>(dec.DecodeLiteral(k));
  }
  if (eob > n) throw DecodeError("coefficient end position out of range");

  for (int i = eob - 1; i >= 0; --i) {
    const int x = scan[i] % size.width;
    const int y = scan[i] / size.width;
    int br;
    if (i == eob - 1) {
      br = dec.DecodeAdaptive(models.br_last[BrContext(levels, x, y, kind)]) + 1;
    } else {
      br = dec.DecodeAdaptive(models.br[BrContext(levels, x, y, kind)]);
    }
    int64_t a = br;
    if (br == 3) {
      const int lr_ctx = LrContext(levels, x, y, kind);
      int steps = 0;
      int lr = 3;
      while (steps < kMaxLrSteps && lr == 3) {
        lr = dec.DecodeAdaptive(models.lr[lr_ctx]);
        a += lr;
        ++steps;
      }
      if (steps == kMaxLrSteps && lr == 3) {
        a = kLevelCascadeCap + 1 + DecodeExpGolomb(dec);
      }
    }
    levels.data()[scan[i]] = static_cast<int32_t>(a);
  }

  if (eob > 0 && levels.data()[scan[0]] != 0 && scan[0] == 0) {
    if (dec.DecodeAdaptive(models.dc_sign[dc_sign_context]) != 0) {
      levels.data()[0] = -levels.data()[0];
    }
  }
  for (int i = 0; i < eob; ++i) {
    if (scan[i] == 0) continue;
    int32_t& v = levels.data()[scan[i]];
    if (v != 0 && dec.DecodeBitUniform() != 0) v = -v;
  }
  return levels;
}

}  // namespace av1lab
