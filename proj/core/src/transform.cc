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

#include "av1lab/transform.h"

#include <array>
#include <cmath>

namespace av1lab {
namespace {

constexpr int kTrigBits = 12;
constexpr int32_t kCosPiQuarterQ12 = 2896;  // round(4096 * cos(pi/4))

// Extra fractional bits carried through the integer passes so per-stage
// rounding noise stays well under the final coefficient LSB.
constexpr int kHeadroomBits = 4;

inline int32_t TrigMul(int32_t v, int32_t c_q12, TxStats* stats) {
  if (stats != nullptr) ++stats->multiplies;
  return RoundShift(int64_t{v} * c_q12, kTrigBits);
}

// cos/sin of (2n+1)*pi/(4*M) in Q12 for M in {1..32}, indexed by log2(M):
// the pre-rotation angles of the radix-2 DCT-IV factorization.
struct BetaTables {
  std::array<std::array<int32_t, 32>, 6> cosb{};
  std::array<std::array<int32_t, 32>, 6> sinb{};
  BetaTables() {
    for (int lg = 0; lg <= 5; ++lg) {
      const int m = 1 << lg;
      for (int n = 0; n < m; ++n) {
        const double beta = (2 * n + 1) * M_PI / (4 * m);
        cosb[lg][n] = static_cast<int32_t>(std::llround(4096.0 * std::cos(beta)));
        sinb[lg][n] = static_cast<int32_t>(std::llround(4096.0 * std::sin(beta)));
      }
    }
  }
};

const BetaTables& Beta() {
  static const BetaTables tables;
  return tables;
}

// DST-VII constants for the 4-point ADST, scaled so the integer transform has
// the same sqrt(N/2) gain as the other kernels: round(4096 * sqrt(2) * (2/3) *
// sin((n+1)(2k+1)pi/9)).
struct Adst4Table {
  std::array<std::array<int32_t, 4>, 4> t{};
  Adst4Table() {
    for (int k = 0; k < 4; ++k) {
      for (int n = 0; n < 4; ++n) {
        t[k][n] = static_cast<int32_t>(std::llround(
            4096.0 * std::sqrt(2.0) * (2.0 / 3.0) *
            std::sin((n + 1) * (2 * k + 1) * M_PI / 9.0)));
      }
    }
  }
};

const std::array<std::array<int32_t, 4>, 4>& Adst4Q12() {
  static const Adst4Table table;
  return table.t;
}

void DctIvUnnormalized(std::span<int32_t> v, TxStats* stats);
void DctIvUnnormalizedT(std::span<int32_t> v, TxStats* stats);

// Unnormalized DCT-II: out[k] = sum_n in[n] * cos((2n+1)k pi / 2N), computed
// by the even/odd fold recursion. In place.
void DctUnnormalized(std::span<int32_t> x, TxStats* stats) {
  const int n = static_cast<int>(x.size());
  if (n == 1) return;
  if (n == 2) {
    const int32_t a = x[0] + x[1];
    const int32_t b = x[0] - x[1];
    x[0] = a;
    x[1] = TrigMul(b, kCosPiQuarterQ12, stats);
    return;
  }
  const int h = n / 2;
  std::array<int32_t, kMaxTxDim / 2> u, v;
  for (int i = 0; i < h; ++i) {
    u[i] = x[i] + x[n - 1 - i];
    v[i] = x[i] - x[n - 1 - i];
  }
  DctUnnormalized(std::span<int32_t>(u.data(), h), stats);
  DctIvUnnormalized(std::span<int32_t>(v.data(), h), stats);
  for (int i = 0; i < h; ++i) {
    x[2 * i] = u[i];
    x[2 * i + 1] = v[i];
  }
}

// Transpose of DctUnnormalized.
void DctUnnormalizedT(std::span<int32_t> x, TxStats* stats) {
  const int n = static_cast<int>(x.size());
  if (n == 1) return;
  if (n == 2) {
    const int32_t m = TrigMul(x[1], kCosPiQuarterQ12, stats);
    const int32_t a = x[0] + m;
    const int32_t b = x[0] - m;
    x[0] = a;
    x[1] = b;
    return;
  }
  const int h = n / 2;
  std::array<int32_t, kMaxTxDim / 2> e, o;
  for (int i = 0; i < h; ++i) {
    e[i] = x[2 * i];
    o[i] = x[2 * i + 1];
  }
  DctUnnormalizedT(std::span<int32_t>(e.data(), h), stats);
  DctIvUnnormalizedT(std::span<int32_t>(o.data(), h), stats);
  for (int i = 0; i < h; ++i) {
    x[i] = e[i] + o[i];
    x[n - 1 - i] = e[i] - o[i];
  }
}

// Unnormalized DCT-IV: out[k] = sum_n in[n] * cos((2n+1)(2k+1) pi / 4M).
// Radix-2 factorization: Givens pre-rotations of the (x[n], x[M-1-n]) pairs
// feed two half-size DCT-IIs (even outputs, via the DST-II sample-twiddle
// identity) and two half-size DCT-IVs (odd outputs).
void DctIvUnnormalized(std::span<int32_t> x, TxStats* stats) {
  const int m = static_cast<int>(x.size());
  if (m == 1) {
    x[0] = TrigMul(x[0], kCosPiQuarterQ12, stats);
    return;
  }
  const int lg = FloorLog2(static_cast<uint32_t>(m));
  const auto& cosb = Beta().cosb[lg];
  const auto& sinb = Beta().sinb[lg];
  if (m == 2) {
    const int64_t a = x[0], b = x[1];
    if (stats != nullptr) stats->multiplies += 4;
    const int32_t o0 = RoundShift(a * cosb[0] + b * cosb[1], kTrigBits);
    const int32_t o1 = RoundShift(a * cosb[1] - b * cosb[0], kTrigBits);
    x[0] = o0;
    x[1] = o1;
    return;
  }
  const int h = m / 2;
  std::array<int32_t, 16> u, ut, v, vt;
  for (int n = 0; n < h; ++n) {
    const int64_t a = x[n], b = x[m - 1 - n];
    const int64_t p1 = a * cosb[n], p2 = b * sinb[n];
    const int64_t p3 = b * cosb[n], p4 = a * sinb[n];
    if (stats != nullptr) stats->multiplies += 4;
    const int32_t sign = (n & 1) ? -1 : 1;
    u[n] = RoundShift(p1 + p2, kTrigBits);
    ut[n] = RoundShift(p1 - p2, kTrigBits);
    v[n] = sign * RoundShift(p3 - p4, kTrigBits);
    vt[n] = sign * RoundShift(p3 + p4, kTrigBits);
  }
  DctUnnormalized(std::span<int32_t>(u.data(), h), stats);    // p
  DctUnnormalized(std::span<int32_t>(v.data(), h), stats);    // q
  DctIvUnnormalized(std::span<int32_t>(ut.data(), h), stats); // r
  DctIvUnnormalized(std::span<int32_t>(vt.data(), h), stats); // s
  x[0] = u[0];
  for (int t = 1; t < h; ++t) x[2 * t] = u[t] + v[h - t];
  for (int t = 0; t < h; ++t) x[2 * t + 1] = ut[t] - vt[h - 1 - t];
}

// Transpose of DctIvUnnormalized (the matrix is symmetric only at M=2; the
// fixed-point evaluation order is mirrored stage by stage).
void DctIvUnnormalizedT(std::span<int32_t> x, TxStats* stats) {
  const int m = static_cast<int>(x.size());
  if (m == 1) {
    x[0] = TrigMul(x[0], kCosPiQuarterQ12, stats);
    return;
  }
  const int lg = FloorLog2(static_cast<uint32_t>(m));
  const auto& cosb = Beta().cosb[lg];
  const auto& sinb = Beta().sinb[lg];
  if (m == 2) {
    // Symmetric 2x2 kernel.
    const int64_t a = x[0], b = x[1];
    if (stats != nullptr) stats->multiplies += 4;
    const int32_t o0 = RoundShift(a * cosb[0] + b * cosb[1], kTrigBits);
    const int32_t o1 = RoundShift(a * cosb[1] - b * cosb[0], kTrigBits);
    x[0] = o0;
    x[1] = o1;
    return;
  }
  const int h = m / 2;
  std::array<int32_t, 16> p, q, r, s;
  p[0] = x[0];
  q[0] = 0;
  for (int t = 1; t < h; ++t) {
    p[t] = x[2 * t];
    q[h - t] = x[2 * t];
  }
  for (int t = 0; t < h; ++t) {
    r[t] = x[2 * t + 1];
    s[h - 1 - t] = -x[2 * t + 1];
  }
  DctUnnormalizedT(std::span<int32_t>(p.data(), h), stats);
  DctUnnormalizedT(std::span<int32_t>(q.data(), h), stats);
  DctIvUnnormalizedT(std::span<int32_t>(r.data(), h), stats);
  DctIvUnnormalizedT(std::span<int32_t>(s.data(), h), stats);
  for (int n = 0; n < h; ++n) {
    const int32_t sign = (n & 1) ? -1 : 1;
    const int64_t us = int64_t{p[n]} + r[n];
    const int64_t ud = int64_t{p[n]} - r[n];
    const int64_t vs = int64_t{sign} * (int64_t{q[n]} + s[n]);
    const int64_t vd = int64_t{sign} * (int64_t{s[n]} - q[n]);
    if (stats != nullptr) stats->multiplies += 4;
    x[n] = RoundShift(us * cosb[n] + vd * sinb[n], kTrigBits);
    x[m - 1 - n] = RoundShift(ud * sinb[n] + vs * cosb[n], kTrigBits);
  }
}

void Adst4(std::span<int32_t> x, TxStats* stats) {
  const auto& t = Adst4Q12();
  std::array<int32_t, 4> out;
  for (int k = 0; k < 4; ++k) {
    int64_t acc = 0;
    for (int n = 0; n < 4; ++n) acc += int64_t{x[n]} * t[k][n];
    if (stats != nullptr) stats->multiplies += 4;
    out[k] = RoundShift(acc, kTrigBits);
  }
  for (int k = 0; k < 4; ++k) x[k] = out[k];
}

void Adst4T(std::span<int32_t> x, TxStats* stats) {
  const auto& t = Adst4Q12();
  std::array<int32_t, 4> out;
  for (int n = 0; n < 4; ++n) {
    int64_t acc = 0;
    for (int k = 0; k < 4; ++k) acc += int64_t{x[k]} * t[k][n];
    if (stats != nullptr) stats->multiplies += 4;
    out[n] = RoundShift(acc, kTrigBits);
  }
  for (int n = 0; n < 4; ++n) x[n] = out[n];
}

// DST-IV via DCT-IV: DST-IV(x)[k] = DCT-IV(x~)[M-1-k] with x~[n] = (-1)^n x[n].
void Adst(std::span<int32_t> x, TxStats* stats) {
  const int m = static_cast<int>(x.size());
  if (m == 4) {
    Adst4(x, stats);
    return;
  }
  for (int n = 1; n < m; n += 2) x[n] = -x[n];
  DctIvUnnormalized(x, stats);
  for (int i = 0, j = m - 1; i < j; ++i, --j) std::swap(x[i], x[j]);
}

void AdstT(std::span<int32_t> x, TxStats* stats) {
  const int m = static_cast<int>(x.size());
  if (m == 4) {
    Adst4T(x, stats);
    return;
  }
  for (int i = 0, j = m - 1; i < j; ++i, --j) std::swap(x[i], x[j]);
  DctIvUnnormalizedT(x, stats);
  for (int n = 1; n < m; n += 2) x[n] = -x[n];
}

void Reverse(std::span<int32_t> x) {
  for (int i = 0, j = static_cast<int>(x.size()) - 1; i < j; ++i, --j) {
    std::swap(x[i], x[j]);
  }
}

// log2 of the squared... no: log2 of the 1-D gain^2 relative to orthonormal,
// i.e. log2(N/2) for sinusoidal kernels and 0 for identity.
int GainLog2(TxKernel k, int n) {
  return k == TxKernel::kIdentity ? 0 : FloorLog2(static_cast<uint32_t>(n)) - 1;
}

void CheckKernel(TxKernel k, int n) {
  if (!KernelAllowed(k, n)) {
    throw std::invalid_argument("illegal transform kernel/size combination");
  }
}

}  // namespace

Grid<double> KernelBasis(TxKernel kind, int n) {
  CheckKernel(kind, n);
  Grid<double> g(n, n);
  switch (kind) {
    case TxKernel::kDct:
      for (int k = 0; k < n; ++k) {
        const double ck = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
        for (int i = 0; i < n; ++i) {
          g.at(i, k) = ck * std::cos((2 * i + 1) * k * M_PI / (2 * n));
        }
      }
      break;
    case TxKernel::kAdst:
    case TxKernel::kFlipAdst:
      if (n == 4) {
        for (int k = 0; k < n; ++k) {
          for (int i = 0; i < n; ++i) {
            g.at(i, k) = (2.0 / 3.0) * std::sin((i + 1) * (2 * k + 1) * M_PI / 9.0);
          }
        }
      } else {
        const double c = std::sqrt(2.0 / n);
        for (int k = 0; k < n; ++k) {
          for (int i = 0; i < n; ++i) {
            g.at(i, k) = c * std::sin((2 * i + 1) * (2 * k + 1) * M_PI / (4 * n));
          }
        }
      }
      if (kind == TxKernel::kFlipAdst) {
        for (int k = 0; k < n; ++k) {
          for (int i = 0; i < n / 2; ++i) std::swap(g.at(i, k), g.at(n - 1 - i, k));
        }
      }
      break;
    case TxKernel::kIdentity:
      for (int k = 0; k < n; ++k) g.at(k, k) = 1.0;
      break;
  }
  return g;
}

namespace {

// Kernel dispatch at the caller's scale; headroom handling happens in the
// public wrappers.
void ForwardRaw(TxKernel k, std::span<int32_t> data, TxStats* stats) {
  switch (k) {
    case TxKernel::kDct:
      DctUnnormalized(data, stats);
      data[0] = TrigMul(data[0], kCosPiQuarterQ12, stats);
      break;
    case TxKernel::kAdst:
      Adst(data, stats);
      break;
    case TxKernel::kFlipAdst:
      Reverse(data);
      Adst(data, stats);
      break;
    case TxKernel::kIdentity:
      break;
  }
}

void InverseRaw(TxKernel k, std::span<int32_t> data, TxStats* stats) {
  switch (k) {
    case TxKernel::kDct:
      data[0] = TrigMul(data[0], kCosPiQuarterQ12, stats);
      DctUnnormalizedT(data, stats);
      break;
    case TxKernel::kAdst:
      AdstT(data, stats);
      break;
    case TxKernel::kFlipAdst:
      AdstT(data, stats);
      Reverse(data);
      break;
    case TxKernel::kIdentity:
      break;
  }
}

}  // namespace

void ForwardTransform1D(TxKernel k, std::span<int32_t> data, TxStats* stats) {
  const int n = static_cast<int>(data.size());
  CheckKernel(k, n);
  for (auto& v : data) v <<= kHeadroomBits;
  ForwardRaw(k, data, stats);
  for (auto& v : data) v = RoundShift(v, kHeadroomBits);
}

void InverseTransform1D(TxKernel k, std::span<int32_t> data, TxStats* stats) {
  const int n = static_cast<int>(data.size());
  CheckKernel(k, n);
  for (auto& v : data) v <<= kHeadroomBits;
  InverseRaw(k, data, stats);
  const int shift = kHeadroomBits + GainLog2(k, n);
  for (auto& v : data) v = RoundShift(v, shift);
}

Grid<int32_t> TxForward(const Grid<int32_t>& residual, TxKernel vertical,
                        TxKernel horizontal, TxStats* stats) {
  const TxSize size{residual.width(), residual.height()};
  if (!KernelPairAllowed(vertical, horizontal, size)) {
    throw std::invalid_argument("illegal transform kernel/size combination");
  }
  const int w = size.width, h = size.height;
  Grid<int32_t> buf(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) buf.at(x, y) = residual.at(x, y) << kHeadroomBits;
  }
  std::array<int32_t, kMaxTxDim> col;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) col[y] = buf.at(x, y);
    ForwardRaw(vertical, std::span<int32_t>(col.data(), h), stats);
    for (int y = 0; y < h; ++y) buf.at(x, y) = col[y];
  }
  for (int y = 0; y < h; ++y) {
    ForwardRaw(horizontal, std::span<int32_t>(buf.row(y), w), stats);
  }
  for (auto& v : buf.data()) v = RoundShift(v, kHeadroomBits);
  return buf;
}

Grid<int32_t> TxInverse(const Grid<int32_t>& coeff, TxKernel vertical,
                        TxKernel horizontal, TxStats* stats) {
  const TxSize size{coeff.width(), coeff.height()};
  if (!KernelPairAllowed(vertical, horizontal, size)) {
    throw std::invalid_argument("illegal transform kernel/size combination");
  }
  const int w = size.width, h = size.height;
  Grid<int32_t> buf(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) buf.at(x, y) = coeff.at(x, y) << kHeadroomBits;
  }
  // Rows first (the reverse of the forward ordering), removing each axis
  // gain as it is applied; headroom comes off with the final column shift.
  const int row_shift = GainLog2(horizontal, w);
  for (int y = 0; y < h; ++y) {
    InverseRaw(horizontal, std::span<int32_t>(buf.row(y), w), stats);
    if (row_shift > 0) {
      for (int x = 0; x < w; ++x) buf.at(x, y) = RoundShift(buf.at(x, y), row_shift);
    }
  }
  const int col_shift = GainLog2(vertical, h) + kHeadroomBits;
  std::array<int32_t, kMaxTxDim> col;
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) col[y] = buf.at(x, y);
    InverseRaw(vertical, std::span<int32_t>(col.data(), h), stats);
    for (int y = 0; y < h; ++y) buf.at(x, y) = RoundShift(col[y], col_shift);
  }
  return buf;
}

TxSize TxInitialSize(BlockSize block) {
  return TxSize{block.width > kMaxTxDim ? kMaxTxDim : block.width,
                block.height > kMaxTxDim ? kMaxTxDim : block.height};
}

std::vector<TxSize> TxSubSizes(TxSize size) {
  const int w = size.width, h = size.height;
  if (w == h) {
    if (w == kMinTxDim) return {};
    return std::vector<TxSize>(4, TxSize{w / 2, h / 2});
  }
  if (w == 2 * h) return std::vector<TxSize>(2, TxSize{h, h});
  if (h == 2 * w) return std::vector<TxSize>(2, TxSize{w, w});
  if (w == 4 * h) return std::vector<TxSize>(2, TxSize{w / 2, h});
  return std::vector<TxSize>(2, TxSize{w, h / 2});
}

TxPartitionOptions TxPartitionOptionsFor(BlockSize block, PredictionClass mode) {
  if (!IsValidBlockSize(block)) {
    throw std::invalid_argument("invalid coding block size");
  }
  TxPartitionOptions opt;
  opt.initial = TxInitialSize(block);
  opt.max_levels = 2;
  if (mode == PredictionClass::kInter) {
    opt.recursive = true;
    return opt;
  }
  // Intra: one uniform size, at most two levels below the initial size.
  TxSize t = opt.initial;
  opt.uniform_sizes.push_back(t);
  for (int level = 0; level < 2; ++level) {
    auto subs = TxSubSizes(t);
    if (subs.empty()) break;
    t = subs[0];
    opt.uniform_sizes.push_back(t);
  }
  return opt;
}

TxSize ChromaTxSize(BlockSize luma_block, int subsampling_x, int subsampling_y) {
  int w = luma_block.width >> subsampling_x;
  int h = luma_block.height >> subsampling_y;
  w = Clamp(w, kMinTxDim, kMaxTxDim);
  h = Clamp(h, kMinTxDim, kMaxTxDim);
  // Keep the aspect ratio legal after clamping.
  while (w > 4 * h) w /= 2;
  while (h > 4 * w) h /= 2;
  return TxSize{w, h};
}

}  // namespace av1lab
