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

#ifndef AV1LAB_ENTROPY_H_
#define AV1LAB_ENTROPY_H_

#include <array>
#include <cstdint>
#include <vector>

#include "av1lab/common.h"

namespace av1lab {

constexpr int kCdfScaleBits = 15;
constexpr uint16_t kCdfScale = 1 << kCdfScaleBits;  // 32768
constexpr int kMinSymbols = 2;
constexpr int kMaxSymbols = 14;
// Minimum symbol width kept after an update, in 15-bit units.
constexpr uint16_t kCdfFloor = 4;

// Adaptive M-ary probability model stored as a 15-bit-scaled CDF. Symbols
// are 0-based; cdf(k) is the cumulative probability through symbol k and
// cdf(M-1) is pinned at 32768.
class CdfModel {
 public:
  // Uniform initialization over m symbols.
  explicit CdfModel(int m);
  // Explicit CDF (strictly increasing, last entry 32768).
  CdfModel(std::initializer_list<uint16_t> cdf);

  int symbol_count() const { return m_; }
  uint16_t cdf(int k) const { return cdf_[k]; }
  int count() const { return count_; }
  void set_count(int c) { count_ = c; }

  // Per-symbol adaptation rate exponent:
  // s = 3 + I(count>15) + I(count>32) + min(log2(M), 2).
  static int RateShift(int count, int m);

  // Integer-shift CDF update after observing symbol k, followed by a floor
  // repair that keeps every width >= kCdfFloor. The appearance counter
  // saturates at 64.
  void Update(int k);

 private:
  void RepairFloor();

  int m_;
  int count_ = 0;
  std::array<uint16_t, kMaxSymbols> cdf_{};
};

// ---- Arithmetic coder -------------------------------------------------------
//
// Multi-symbol range coder working on the most significant 9 bits of the
// CDF. Boundary for (1-based) symbol k at interval length R:
//   bound(0) = R
//   bound(k) = ((R >> 8) * ((32768 - cdf_k) >> 6)) >> 1  +  4 * (M - k)
// Symbol k owns [bound(k), bound(k-1)) measured from the top of the
// interval; the 4*(M-k) spacing guarantees a nonzero width for every symbol
// in every state. R is renormalized to (2^15, 2^16] between symbols.
//
// The byte stream produced by SymbolEncoder and consumed by SymbolDecoder is
// the module's wire format: MSB-first bits, carry propagation resolved at
// the byte level, terminated by a 16-bit value inside the final interval and
// zero padding to a byte boundary.

struct CoderStats {
  uint32_t max_multiplicand_a = 0;  // R >> 8
  uint32_t max_multiplicand_b = 0;  // (32768 - cdf) >> 6
  int64_t symbols = 0;
};

class SymbolEncoder {
 public:
  // Codes symbol k with the model's current state; does not adapt.
  void Encode(const CdfModel& model, int k);
  // Codes then updates the model (the usual adaptive path).
  void EncodeAdaptive(CdfModel& model, int k);
  // A statistically uniform bit (the bypass path for raw bits).
  void EncodeBitUniform(int bit);
  void EncodeLiteral(uint32_t value, int bits);  // MSB first

  // Terminates the stream; no further symbols may be coded.
  std::vector<uint8_t> Finish();

  const CoderStats& stats() const { return stats_; }

 private:
  void EmitBit(int bit);
  void EmitByte(uint8_t byte);
  void Carry();
  void Renormalize();

  uint32_t range_ = 1u << 16;
  uint32_t low_ = 0;  // 16 fractional bits
  // Pending output: a partially filled bit accumulator, then a held byte
  // followed by a count of 0xFF bytes awaiting possible carry.
  uint32_t bit_acc_ = 0;
  int bit_count_ = 0;
  int held_byte_ = -1;
  int pending_ff_ = 0;
  std::vector<uint8_t> out_;
  bool finished_ = false;
  CoderStats stats_;
};

class SymbolDecoder {
 public:
  explicit SymbolDecoder(std::vector<uint8_t> bytes);

  int Decode(const CdfModel& model);
  int DecodeAdaptive(CdfModel& model);
  int DecodeBitUniform();
  uint32_t DecodeLiteral(int bits);

 private:
  int NextBit();
  void Renormalize();

  std::vector<uint8_t> bytes_;
  size_t byte_pos_ = 0;
  int bit_pos_ = 0;
  int virtual_bits_ = 0;  // bits read past the end of the stream
  uint32_t range_ = 1u << 16;
  uint32_t value_ = 0;
};

}  // namespace av1lab

#endif  // AV1LAB_ENTROPY_H_
