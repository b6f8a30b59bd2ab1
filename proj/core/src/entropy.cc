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

#include "av1lab/entropy.h"

#include <algorithm>

namespace av1lab {
namespace {

constexpr uint32_t kTop = 1u << 16;
constexpr uint32_t kHalf = 1u << 15;
constexpr int kCountSaturation = 64;
constexpr int kMaxVirtualBits = 64;

void CheckSymbolCount(int m) {
  if (m < kMinSymbols || m > kMaxSymbols) {
    throw std::invalid_argument("symbol count must be in [2, 14]");
  }
}

// bound(k) for 1-based k; bound(0) = R.
inline uint32_t Bound(uint32_t range, const CdfModel& model, int k,
                      CoderStats* stats) {
  if (k == 0) return range;
  const int m = model.symbol_count();
  if (k == m) return 0;
  const uint32_t a = range >> 8;
  const uint32_t b = (kCdfScale - model.cdf(k - 1)) >> 6;
  if (stats != nullptr) {
    stats->max_multiplicand_a = std::max(stats->max_multiplicand_a, a);
    stats->max_multiplicand_b = std::max(stats->max_multiplicand_b, b);
  }
  return ((a * b) >> 1) + 4 * (m - k);
}

}  // namespace

CdfModel::CdfModel(int m) : m_(m) {
  CheckSymbolCount(m);
  for (int k = 0; k < m; ++k) {
    cdf_[k] = static_cast<uint16_t>((uint32_t{kCdfScale} * (k + 1)) / m);
  }
  cdf_[m - 1] = kCdfScale;
}

CdfModel::CdfModel(std::initializer_list<uint16_t> cdf)
    : m_(static_cast<int>(cdf.size())) {
  CheckSymbolCount(m_);
  int k = 0;
  uint16_t prev = 0;
  for (uint16_t c : cdf) {
    if (c <= prev) throw std::invalid_argument("CDF must be strictly increasing");
    cdf_[k++] = c;
    prev = c;
  }
  if (cdf_[m_ - 1] != kCdfScale) {
    throw std::invalid_argument("final CDF entry must be 32768");
  }
}

int CdfModel::RateShift(int count, int m) {
  return 3 + (count > 15 ? 1 : 0) + (count > 32 ? 1 : 0) +
         std::min(FloorLog2(static_cast<uint32_t>(m)), 2);
}

void CdfModel::Update(int k) {
  const int s = RateShift(count_, m_);
  for (int i = 0; i < m_ - 1; ++i) {
    if (i < k) {
      cdf_[i] = static_cast<uint16_t>(cdf_[i] - (cdf_[i] >> s));
    } else {
      cdf_[i] = static_cast<uint16_t>(cdf_[i] + ((kCdfScale - cdf_[i]) >> s));
    }
  }
  RepairFloor();
  count_ = std::min(count_ + 1, kCountSaturation);
}

void CdfModel::RepairFloor() {
  uint16_t prev = 0;
  for (int i = 0; i < m_ - 1; ++i) {
    const uint16_t lo = static_cast<uint16_t>(prev + kCdfFloor);
    const uint16_t hi =
        static_cast<uint16_t>(kCdfScale - kCdfFloor * (m_ - 1 - i));
    cdf_[i] = Clamp<uint16_t>(cdf_[i], lo, hi);
    prev = cdf_[i];
  }
}

// ---- Encoder ----------------------------------------------------------------

void SymbolEncoder::EmitByte(uint8_t byte) {
  if (held_byte_ < 0) {
    held_byte_ = byte;
    return;
  }
  if (byte == 0xFF) {
    ++pending_ff_;
    return;
  }
  out_.push_back(static_cast<uint8_t>(held_byte_));
  for (; pending_ff_ > 0; --pending_ff_) out_.push_back(0xFF);
  held_byte_ = byte;
}

void SymbolEncoder::EmitBit(int bit) {
  bit_acc_ = (bit_acc_ << 1) | static_cast<uint32_t>(bit);
  if (++bit_count_ == 8) {
    EmitByte(static_cast<uint8_t>(bit_acc_));
    bit_acc_ = 0;
    bit_count_ = 0;
  }
}

void SymbolEncoder::Carry() {
  // Increment the pending bit string. A partial accumulator that is not
  // all-ones absorbs the carry; otherwise it zeroes and the carry moves into
  // the held byte, flipping the pending 0xFF run.
  if (bit_count_ > 0 && bit_acc_ != (1u << bit_count_) - 1) {
    ++bit_acc_;
    return;
  }
  bit_acc_ = 0;
  assert(held_byte_ >= 0 && held_byte_ < 0xFF);
  out_.push_back(static_cast<uint8_t>(held_byte_ + 1));
  for (; pending_ff_ > 0; --pending_ff_) out_.push_back(0x00);
  held_byte_ = -1;
}

void SymbolEncoder::Renormalize() {
  while (range_ <= kHalf) {
    EmitBit(static_cast<int>(low_ >> 15));
    low_ = (low_ << 1) & (kTop - 1);
    range_ <<= 1;
  }
}

void SymbolEncoder::Encode(const CdfModel& model, int k) {
  assert(!finished_);
  assert(k >= 0 && k < model.symbol_count());
  ++stats_.symbols;
  const uint32_t u = Bound(range_, model, k, &stats_);
  const uint32_t v = Bound(range_, model, k + 1, &stats_);
  assert(v < u && u <= range_);
  low_ += range_ - u;
  if (low_ >= kTop) {
    Carry();
    low_ -= kTop;
  }
  range_ = u - v;
  Renormalize();
}

void SymbolEncoder::EncodeAdaptive(CdfModel& model, int k) {
  Encode(model, k);
  model.Update(k);
}

void SymbolEncoder::EncodeBitUniform(int bit) {
  static const CdfModel half{16384, 32768};
  Encode(half, bit & 1);
}

void SymbolEncoder::EncodeLiteral(uint32_t value, int bits) {
  for (int i = bits - 1; i >= 0; --i) EncodeBitUniform((value >> i) & 1);
}

std::vector<uint8_t> SymbolEncoder::Finish() {
  assert(!finished_);
  finished_ = true;
  // Any 16-bit value inside [low, low + range) completes the stream.
  uint32_t v = low_ + (range_ >> 1);
  if (v >= kTop) {
    Carry();
    v -= kTop;
  }
  for (int i = 15; i >= 0; --i) EmitBit((v >> i) & 1);
  while (bit_count_ != 0) EmitBit(0);
  if (held_byte_ >= 0) {
    out_.push_back(static_cast<uint8_t>(held_byte_));
    for (; pending_ff_ > 0; --pending_ff_) out_.push_back(0xFF);
    held_byte_ = -1;
  }
  return std::move(out_);
}

// ---- Decoder ----------------------------------------------------------------

SymbolDecoder::SymbolDecoder(std::vector<uint8_t> bytes)
    : bytes_(std::move(bytes)) {
  for (int i = 0; i < 16; ++i) value_ = (value_ << 1) | NextBit();
}

int SymbolDecoder::NextBit() {
  if (byte_pos_ >= bytes_.size()) {
    if (++virtual_bits_ > kMaxVirtualBits) {
      throw DecodeError("arithmetic bitstream exhausted");
    }
    return 0;
  }
  const int bit = (bytes_[byte_pos_] >> (7 - bit_pos_)) & 1;
  if (++bit_pos_ == 8) {
    bit_pos_ = 0;
    ++byte_pos_;
  }
  return bit;
}

void SymbolDecoder::Renormalize() {
  while (range_ <= kHalf) {
    value_ = ((value_ << 1) | NextBit()) & (kTop - 1);
    range_ <<= 1;
  }
}

int SymbolDecoder::Decode(const CdfModel& model) {
  const uint32_t offset = value_;  // position measured from the interval base
  const uint32_t complement = range_ - 1 - offset;
  // Find the (1-based) k with bound(k) <= complement < bound(k-1).
  int k = 1;
  uint32_t upper = Bound(range_, model, 0, nullptr);
  uint32_t lower = Bound(range_, model, 1, nullptr);
  while (complement < lower) {
    upper = lower;
    ++k;
    lower = Bound(range_, model, k, nullptr);
  }
  value_ = offset - (range_ - upper);
  range_ = upper - lower;
  Renormalize();
  return k - 1;
}

int SymbolDecoder::DecodeAdaptive(CdfModel& model) {
  const int k = Decode(model);
  model.Update(k);
  return k;
}

int SymbolDecoder::DecodeBitUniform() {
  static const CdfModel half{16384, 32768};
  return Decode(half);
}

uint32_t SymbolDecoder::DecodeLiteral(int bits) {
  uint32_t v = 0;
  for (int i = 0; i < bits; ++i) v = (v << 1) | DecodeBitUniform();
  return v;
}

}  // namespace av1lab
