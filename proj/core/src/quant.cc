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

#include "av1lab/quant.h"

#include <array>
#include <cmath>

namespace av1lab {
namespace {

// Frozen step tables: geometric growth from 1 at QP 0 to ~3000 at QP 255,
// with the DC step about 20% below the AC curve. Both are nondecreasing and
// the DC step is strictly smaller once the steps leave the minimum.
struct StepTables {
  std::array<int32_t, kMaxQp + 1> ac{};
  std::array<int32_t, kMaxQp + 1> dc{};
  StepTables() {
    const double rate = std::log(3000.0) / kMaxQp;
    ac[0] = dc[0] = 1;
    for (int q = 1; q <= kMaxQp; ++q) {
      const double s = std::exp(q * rate);
      ac[q] = static_cast<int32_t>(std::max<int64_t>(1, std::llround(s)));
      ac[q] = std::max(ac[q], ac[q - 1]);
      dc[q] = std::max(1, ac[q] - std::max(1, (ac[q] + 2) / 5));
      dc[q] = std::max(dc[q], dc[q - 1]);
    }
  }
};

const StepTables& Tables() {
  static const StepTables tables;
  return tables;
}

int CheckQp(int qp) {
  if (qp < 0 || qp > kMaxQp) throw std::invalid_argument("QP out of [0,255]");
  return qp;
}

}  // namespace

int32_t QuantStep(int qp, QuantBand band) {
  CheckQp(qp);
  return band == QuantBand::kDc ? Tables().dc[qp] : Tables().ac[qp];
}

int32_t Quantize(int32_t coeff, int qp, QuantBand band) {
  const int64_t step = QuantStep(qp, band);
  const int64_t mag = (std::abs(int64_t{coeff}) + step / 2) / step;
  const int64_t k = coeff < 0 ? -mag : mag;
  return static_cast<int32_t>(Clamp<int64_t>(k, kLevelMin, kLevelMax));
}

int32_t Dequantize(int32_t index, int qp, QuantBand band) {
  const int64_t v = int64_t{index} * QuantStep(qp, band);
  return static_cast<int32_t>(Clamp<int64_t>(v, -kDequantMax, kDequantMax));
}

int EffectiveQp(const QuantParams& params, PlaneId plane, QuantBand band) {
  CheckQp(params.base_qp);
  if (params.sb_resolution != 1 && params.sb_resolution != 2 &&
      params.sb_resolution != 4 && params.sb_resolution != 8) {
    throw std::invalid_argument("superblock QP resolution must be 1, 2, 4 or 8");
  }
  if (params.base_qp == 0) return 0;  // lossless, offsets ignored
  int frame_qp = params.base_qp;
  switch (plane) {
    case PlaneId::kY:
      if (band == QuantBand::kDc) frame_qp += params.delta_y_dc;
      break;
    case PlaneId::kU:
      frame_qp += band == QuantBand::kDc ? params.delta_u_dc : params.delta_u_ac;
      break;
    case PlaneId::kV:
      frame_qp += band == QuantBand::kDc ? params.delta_v_dc : params.delta_v_ac;
      break;
  }
  const int sb = params.sb_offset_units * params.sb_resolution;
  return Clamp(frame_qp + sb + params.seg_offset, 1, kMaxQp);
}

}  // namespace av1lab
