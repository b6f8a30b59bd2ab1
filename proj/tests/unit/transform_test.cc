#include <cmath>
#include <random>
#include <vector>

#include "av1lab/quant.h"
#include "av1lab/transform.h"
#include "doctest.h"
#include "fixtures.h"

namespace av1lab {
namespace {

constexpr TxKernel kAllKernels[] = {TxKernel::kDct, TxKernel::kAdst,
                                    TxKernel::kFlipAdst, TxKernel::kIdentity};

// Scaled float reference: gain sqrt(N/2) per sinusoidal axis, 1 for identity.
double AxisGain(TxKernel k, int n) {
  return k == TxKernel::kIdentity ? 1.0 : std::sqrt(n / 2.0);
}

Grid<double> FloatForward2D(const Grid<int32_t>& in, TxKernel v, TxKernel h) {
  const int w = in.width(), ht = in.height();
  const Grid<double> gv = KernelBasis(v, ht);
  const Grid<double> gh = KernelBasis(h, w);
  Grid<double> tmp(w, ht), out(w, ht);
  for (int x = 0; x < w; ++x) {
    for (int k = 0; k < ht; ++k) {
      double acc = 0;
      for (int n = 0; n < ht; ++n) acc += gv.at(n, k) * in.at(x, n);
      tmp.at(x, k) = acc;
    }
  }
  const double gain = AxisGain(v, ht) * AxisGain(h, w);
  for (int y = 0; y < ht; ++y) {
    for (int k = 0; k < w; ++k) {
      double acc = 0;
      for (int n = 0; n < w; ++n) acc += gh.at(n, k) * tmp.at(n, y);
      out.at(k, y) = acc * gain;
    }
  }
  return out;
}

TEST_SUITE_BEGIN("transform_quant");

TEST_CASE("float DCT and ADST bases are orthonormal") {
  for (TxKernel k : {TxKernel::kDct, TxKernel::kAdst, TxKernel::kFlipAdst}) {
    for (int n : {4, 8, 16}) {
      const Grid<double> g = KernelBasis(k, n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          double dot = 0;
          for (int i = 0; i < n; ++i) dot += g.at(i, a) * g.at(i, b);
          CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
      }
    }
  }
  for (int n : {32, 64}) {
    const Grid<double> g = KernelBasis(TxKernel::kDct, n);
    for (int a = 0; a < n; ++a) {
      double dot = 0;
      for (int i = 0; i < n; ++i) dot += g.at(i, a) * g.at(i, a);
      CHECK(std::abs(dot - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("FLIPADST basis is the sample-reversed ADST basis") {
  for (int n : {4, 8, 16}) {
    const Grid<double> a = KernelBasis(TxKernel::kAdst, n);
    const Grid<double> f = KernelBasis(TxKernel::kFlipAdst, n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        CHECK(f.at(i, k) == doctest::Approx(a.at(n - 1 - i, k)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ADST N=8 first entry matches the sine form") {
  const Grid<double> g = KernelBasis(TxKernel::kAdst, 8);
  CHECK(g.at(0, 0) ==
        doctest::Approx(std::sqrt(2.0 / 8.0) * std::sin(M_PI / 32.0)).epsilon(1e-12));
}

TEST_CASE("ADST and FLIPADST are rejected at 32 and above") {
  CHECK(!KernelAllowed(TxKernel::kAdst, 32));
  CHECK(!KernelAllowed(TxKernel::kFlipAdst, 64));
  CHECK(KernelAllowed(TxKernel::kDct, 64));
  CHECK(KernelAllowed(TxKernel::kIdentity, 64));
  Grid<int32_t> block(32, 32, 1);
  CHECK_THROWS_AS(TxForward(block, TxKernel::kAdst, TxKernel::kDct),
                  std::invalid_argument);
}

TEST_CASE("identity x identity is an exact integer identity") {
  auto rng = test::Rng(3);
  const Grid<int32_t> block = test::RandomResidual(rng, 16, 16, 8191);
  const Grid<int32_t> fwd = TxForward(block, TxKernel::kIdentity, TxKernel::kIdentity);
  CHECK(fwd == block);
  CHECK(TxInverse(fwd, TxKernel::kIdentity, TxKernel::kIdentity) == block);
}

TEST_CASE("DCT of a constant block compacts to a single DC coefficient") {
  Grid<int32_t> block(8, 8, 73);
  const Grid<int32_t> fwd = TxForward(block, TxKernel::kDct, TxKernel::kDct);
  CHECK(fwd.at(0, 0) != 0);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      if (x == 0 && y == 0) continue;
      CHECK(std::abs(fwd.at(x, y)) <= 1);
    }
  }
}

TEST_CASE("integer kernels stay within 1 LSB of the scaled float oracle") {
  auto rng = test::Rng(17);
  for (TxKernel k : kAllKernels) {
    for (int n : {4, 8, 16, 32, 64}) {
      if (!KernelAllowed(k, n)) continue;
      // Amplitudes where the 12-bit constants keep the integer kernels
      // within 1 LSB of the exact basis; the precision floor tightens as N
      // grows.
      const int range = n <= 4 ? 1000 : n <= 8 ? 255 : n <= 16 ? 192 : n <= 32 ? 160 : 96;
      for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> d(-range, range);
        std::vector<int32_t> x(n);
        for (auto& v : x) v = d(rng);
        const Grid<double> basis = KernelBasis(k, n);
        std::vector<double> ref(n, 0.0);
        for (int kk = 0; kk < n; ++kk) {
          for (int i = 0; i < n; ++i) ref[kk] += basis.at(i, kk) * x[i];
          ref[kk] *= AxisGain(k, n);
        }
        std::vector<int32_t> got = x;
        ForwardTransform1D(k, got);
        for (int kk = 0; kk < n; ++kk) {
          CHECK(std::abs(got[kk] - ref[kk]) <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("round trip within 1 LSB for all 16 kernel pairs at 4..16") {
  auto rng = test::Rng(29);
  for (TxKernel v : kAllKernels) {
    for (TxKernel h : kAllKernels) {
      for (int n : {4, 8, 16}) {
        for (int iter = 0; iter < 25; ++iter) {
          const Grid<int32_t> block = test::RandomResidual(rng, n, n, 1023);
          const Grid<int32_t> rt = TxInverse(TxForward(block, v, h), v, h);
          for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
              CHECK(std::abs(rt.at(x, y) - block.at(x, y)) <= 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("round trip within 1 LSB for DCT/IDTX pairs at 32 and 64") {
  auto rng = test::Rng(31);
  for (TxKernel v : {TxKernel::kDct, TxKernel::kIdentity}) {
    for (TxKernel h : {TxKernel::kDct, TxKernel::kIdentity}) {
      for (int n : {32, 64}) {
        for (int iter = 0; iter < 8; ++iter) {
          const Grid<int32_t> block = test::RandomResidual(rng, n, n, 1023);
          const Grid<int32_t> rt = TxInverse(TxForward(block, v, h), v, h);
          for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x) {
              CHECK(std::abs(rt.at(x, y) - block.at(x, y)) <= 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("rectangular transforms round trip") {
  auto rng = test::Rng(37);
  const TxSize sizes[] = {{8, 4}, {4, 8}, {16, 4}, {4, 16}, {32, 16}, {16, 64}};
  for (TxSize s : sizes) {
    const TxKernel v = KernelAllowed(TxKernel::kAdst, s.height) ? TxKernel::kAdst
                                                                : TxKernel::kDct;
    const TxKernel h = TxKernel::kDct;
    for (int iter = 0; iter < 10; ++iter) {
      const Grid<int32_t> block = test::RandomResidual(rng, s.width, s.height, 511);
      const Grid<int32_t> rt = TxInverse(TxForward(block, v, h), v, h);
      for (int y = 0; y < s.height; ++y) {
        for (int x = 0; x < s.width; ++x) {
          CHECK(std::abs(rt.at(x, y) - block.at(x, y)) <= 1);
        }
      }
    }
  }
}

TEST_CASE("2-D integer transform tracks the scaled float transform") {
  auto rng = test::Rng(41);
  const Grid<int32_t> block = test::RandomResidual(rng, 8, 8, 255);
  const Grid<int32_t> got = TxForward(block, TxKernel::kAdst, TxKernel::kDct);
  const Grid<double> ref = FloatForward2D(block, TxKernel::kAdst, TxKernel::kDct);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      CHECK(std::abs(got.at(x, y) - ref.at(x, y)) <= 2.0);
    }
  }
}

TEST_CASE("butterfly DCT multiply count is far below the dense bound") {
  std::vector<int32_t> x(32, 1);
  TxStats stats;
  ForwardTransform1D(TxKernel::kDct, x, &stats);
  CHECK(stats.multiplies < 32 * 32);
  CHECK(stats.multiplies <= 512);  // radix-2 lattice, ~N log^2 N
}

TEST_CASE("transform partition options") {
  const auto inter16 = TxPartitionOptionsFor(BlockSize{16, 16}, PredictionClass::kInter);
  CHECK(inter16.initial == TxSize{16, 16});
  CHECK(inter16.recursive);
  CHECK(inter16.max_levels == 2);
  const auto sub16 = TxSubSizes(TxSize{16, 16});
  REQUIRE(sub16.size() == 4);
  CHECK(sub16[0] == TxSize{8, 8});
  const auto sub8 = TxSubSizes(TxSize{8, 8});
  REQUIRE(sub8.size() == 4);
  CHECK(sub8[0] == TxSize{4, 4});

  const auto intra128 = TxPartitionOptionsFor(BlockSize{128, 128}, PredictionClass::kIntra);
  CHECK(intra128.initial == TxSize{64, 64});
  REQUIRE(intra128.uniform_sizes.size() == 3);
  CHECK(intra128.uniform_sizes[1] == TxSize{32, 32});

  const auto intra4 = TxPartitionOptionsFor(BlockSize{4, 4}, PredictionClass::kIntra);
  REQUIRE(intra4.uniform_sizes.size() == 1);
  CHECK(intra4.uniform_sizes[0] == TxSize{4, 4});
  CHECK(TxSubSizes(TxSize{4, 4}).empty());

  CHECK(TxSubSizes(TxSize{8, 4}) == std::vector<TxSize>(2, TxSize{4, 4}));
  CHECK(TxSubSizes(TxSize{16, 4}) == std::vector<TxSize>(2, TxSize{8, 4}));

  CHECK(ChromaTxSize(BlockSize{64, 16}, 1, 1) == TxSize{32, 8});
  CHECK(ChromaTxSize(BlockSize{4, 4}, 1, 1) == TxSize{4, 4});
}

TEST_CASE("quantizer: QP 0 is the identity at transform scale") {
  for (int32_t c : {-32768, -1000, -1, 0, 1, 77, 32767}) {
    const int32_t k = Quantize(c, 0, QuantBand::kAc);
    CHECK(Dequantize(k, 0, QuantBand::kAc) == c);
    CHECK(Dequantize(Quantize(c, 0, QuantBand::kDc), 0, QuantBand::kDc) == c);
  }
}

TEST_CASE("quantizer: zero maps to zero at every QP") {
  for (int qp = 0; qp <= 255; qp += 17) {
    CHECK(Quantize(0, qp, QuantBand::kAc) == 0);
    CHECK(Dequantize(0, qp, QuantBand::kAc) == 0);
  }
}

TEST_CASE("quantizer: reconstruction error bounded by half a step") {
  const int qp = 100;
  const int64_t step = QuantStep(qp, QuantBand::kAc);
  for (int32_t c = -6000; c <= 6000; c += 7) {
    const int32_t rec = Dequantize(Quantize(c, qp, QuantBand::kAc), qp, QuantBand::kAc);
    CHECK(std::abs(int64_t{rec} - c) * 2 <= step);
  }
}

TEST_CASE("quantizer step tables are monotone and DC sits below AC") {
  for (int qp = 1; qp <= 255; ++qp) {
    CHECK(QuantStep(qp, QuantBand::kAc) >= QuantStep(qp - 1, QuantBand::kAc));
    CHECK(QuantStep(qp, QuantBand::kDc) >= QuantStep(qp - 1, QuantBand::kDc));
    CHECK(QuantStep(qp, QuantBand::kDc) <= QuantStep(qp, QuantBand::kAc));
  }
  for (int qp = 16; qp <= 255; ++qp) {
    CHECK(QuantStep(qp, QuantBand::kDc) < QuantStep(qp, QuantBand::kAc));
  }
}

TEST_CASE("effective QP composition and clipping") {
  QuantParams p;
  p.base_qp = 50;
  CHECK(EffectiveQp(p, PlaneId::kY, QuantBand::kAc) == 50);

  p.base_qp = 2;
  p.sb_offset_units = -5;
  p.sb_resolution = 1;
  CHECK(EffectiveQp(p, PlaneId::kY, QuantBand::kAc) == 1);

  p = QuantParams{};
  p.base_qp = 250;
  p.seg_offset = 10;
  CHECK(EffectiveQp(p, PlaneId::kY, QuantBand::kAc) == 255);

  p = QuantParams{};
  p.base_qp = 100;
  p.delta_u_ac = -12;
  p.sb_offset_units = 2;
  p.sb_resolution = 4;
  CHECK(EffectiveQp(p, PlaneId::kU, QuantBand::kAc) == 96);

  p = QuantParams{};
  p.base_qp = 0;
  p.seg_offset = 30;
  CHECK(EffectiveQp(p, PlaneId::kY, QuantBand::kAc) == 0);

  p.sb_resolution = 3;
  CHECK_THROWS_AS(EffectiveQp(p, PlaneId::kY, QuantBand::kAc),
                  std::invalid_argument);
}

TEST_SUITE_END();

}  // namespace
}  // namespace av1lab
