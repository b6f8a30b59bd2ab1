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

#ifndef AV1LAB_QUANT_H_
#define AV1LAB_QUANT_H_

#include "av1lab/common.h"

namespace av1lab {

enum class QuantBand : uint8_t { kDc, kAc };
enum class PlaneId : uint8_t { kY = 0, kU = 1, kV = 2 };

constexpr int kMaxQp = 255;
constexpr int32_t kLevelMin = -32768;
constexpr int32_t kLevelMax = 32767;
// Dequantized values clamp to the transform's input domain.
constexpr int32_t kDequantMax = 1 << 20;

// Uniform quantizer step size for a QP. QP 0 maps to step 1 (the lossless
// step at transform scale); above that the DC table sits below the AC table
// and both grow monotonically.
int32_t QuantStep(int qp, QuantBand band);

// Round-to-nearest quantization index, clamped to the level range.
int32_t Quantize(int32_t coeff, int qp, QuantBand band);
// Reconstruction is index * step.
int32_t Dequantize(int32_t index, int qp, QuantBand band);

// Frame-level QP offsets per plane/band plus superblock and segment offsets.
struct QuantParams {
  int base_qp = 0;
  int delta_y_dc = 0;
  int delta_u_dc = 0;
  int delta_u_ac = 0;
  int delta_v_dc = 0;
  int delta_v_ac = 0;
  // The superblock offset is signalled in units of `sb_resolution`, one of
  // {1, 2, 4, 8}.
  int sb_offset_units = 0;
  int sb_resolution = 1;
  int seg_offset = 0;
};

// Composes the frame-level table with the superblock and segment offsets and
// clips to [1, 255]; a zero base QP short-circuits to lossless (0) since the
// QP is not allowed to move between zero and non-zero.
int EffectiveQp(const QuantParams& params, PlaneId plane, QuantBand band);

}  // namespace av1lab

#endif  // AV1LAB_QUANT_H_
