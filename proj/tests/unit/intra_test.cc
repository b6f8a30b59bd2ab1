#include <cmath>
#include <random>

#include "av1lab/intra.h"
#include "doctest.h"
#include "fixtures.h"

namespace av1lab {
namespace {

IntraEdges MakeEdges(std::mt19937& rng, BlockSize size, int bit_depth) {
  std::uniform_int_distribution<int> d(0, (1 << bit_depth) - 1);
  std::vector<uint16_t> above(2 * size.width), left(2 * size.height);
  for (auto& v : above) v = static_cast<uint16_t>(d(rng));
  for (auto& v : left) v = static_cast<uint16_t>(d(rng));
  return IntraEdges(std::move(above), std::move(left),
                    static_cast<uint16_t>(d(rng)), bit_depth);
}

IntraEdges ConstantEdges(uint16_t c, BlockSize size, int bit_depth = 8) {
  return IntraEdges(std::vector<uint16_t>(2 * size.width, c),
                    std::vector<uint16_t>(2 * size.height, c), c, bit_depth);
}

// Independent floating-point projection oracle for directional prediction:
// per-pixel geometry in doubles, sharing only the frozen 1/64-pel slope
// constants.
uint16_t DirectionalOracle(const IntraEdges& edges, int angle, int r, int c) {
  if (angle == 90) return edges.above(c);
  if (angle == 180) return edges.left(r);
  const double d_above = std::llround(64.0 / std::tan(angle * M_PI / 180.0)) / 64.0;
  const double d_left = std::llround(64.0 * std::tan(angle * M_PI / 180.0)) / 64.0;
  double pos;
  bool use_above;
  if (angle < 90) {
    use_above = true;
    pos = c + (r + 1) * d_above;
  } else if (angle < 180) {
    pos = c + (r + 1) * d_above;
    use_above = pos >= -1.0;
    if (!use_above) pos = r + (c + 1) * d_left;
  } else {
    use_above = false;
    pos = r + (c + 1) * d_left;
  }
  const double base = std::floor(pos);
  const double frac = pos - base;
  const int b = static_cast<int>(base);
  const double a0 = use_above ? edges.above(std::max(b, -1))
                              : edges.left(std::max(b, -1));
  const double a1 = use_above ? edges.above(std::max(b, -1) + 1)
                              : edges.left(std::max(b, -1) + 1);
  return static_cast<uint16_t>(std::floor((1.0 - frac) * a0 + frac * a1 + 0.5));
}

// Per-pixel recursion oracle: evaluates the first-order recursion pixel by
// pixel at full precision inside each 4x2 patch, rounding patch outputs to
// pixels exactly like the production path must.
PixelGrid RecursiveOracle(const IntraEdges& edges, int set, BlockSize size) {
  const RecursiveFilterCoeffs& cf = RecursiveFilterSet(set);
  const double a = cf.alpha_q6 / 64.0, b = cf.beta_q6 / 64.0,
               g = cf.gamma_q6 / 64.0;
  const int w = size.width, h = size.height;
  const int hi = (1 << edges.bit_depth()) - 1;
  PixelGrid out(w, h);
  for (int py = 0; py < h; py += 2) {
    for (int px = 0; px < w; px += 4) {
      double cell[2][4];
      auto ref = [&](int c, int r) -> double {
        if (r < 0) return edges.above(c);
        if (c < 0) return edges.left(r);
        if (r < py || c < px) return out.at(c, r);
        return cell[r - py][c - px];
      };
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 4; ++c) {
          cell[r][c] = a * ref(px + c, py + r - 1) + b * ref(px + c - 1, py + r) +
                       g * ref(px + c - 1, py + r - 1);
        }
      }
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 4; ++c) {
          const int v = static_cast<int>(std::floor(cell[r][c] + 0.5));
          out.at(px + c, py + r) = static_cast<uint16_t>(Clamp(v, 0, hi));
        }
      }
    }
  }
  return out;
}

TEST_SUITE_BEGIN("intra_predict");

TEST_CASE("vertical base mode copies the above row") {
  std::vector<uint16_t> above = {10, 20, 30, 40, 40, 40, 40, 40};
  IntraEdges edges(above, std::vector<uint16_t>(8, 99), 50, 8);
  const PixelGrid out =
      PredictDirectional(edges, DirectionalMode{2, 0}, BlockSize{4, 4});
  for (int r = 0; r < 4; ++r) {
    CHECK(out.at(0, r) == 10);
    CHECK(out.at(1, r) == 20);
    CHECK(out.at(2, r) == 30);
    CHECK(out.at(3, r) == 40);
  }
}

TEST_CASE("constant edges produce a constant block at every angle") {
  const IntraEdges edges = ConstantEdges(128, BlockSize{8, 8});
  for (int base = 0; base < 8; ++base) {
    for (int delta = -3; delta <= 3; ++delta) {
      const PixelGrid out =
          PredictDirectional(edges, DirectionalMode{base, delta}, BlockSize{8, 8});
      for (const auto& v : out.data()) CHECK(v == 128);
    }
  }
}

TEST_CASE("oblique directional prediction matches the projection oracle") {
  auto rng = test::Rng(101);
  // Ramp edges, 48 degrees (45 + one 3-degree step).
  std::vector<uint16_t> above(16), left(16);
  for (int i = 0; i < 16; ++i) {
    above[i] = static_cast<uint16_t>(20 + 9 * i);
    left[i] = static_cast<uint16_t>(60 + 5 * i);
  }
  IntraEdges ramp(above, left, 15, 8);
  const PixelGrid out =
      PredictDirectional(ramp, DirectionalMode{0, 1}, BlockSize{8, 8});
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      CHECK(std::abs(out.at(c, r) - DirectionalOracle(ramp, 48, r, c)) <= 1);
    }
  }
  // Random edges across all base angles and deltas.
  for (int iter = 0; iter < 10; ++iter) {
    const IntraEdges edges = MakeEdges(rng, BlockSize{8, 8}, 8);
    for (int base = 0; base < 8; ++base) {
      for (int delta = -3; delta <= 3; ++delta) {
        const DirectionalMode mode{base, delta};
        const PixelGrid out2 = PredictDirectional(edges, mode, BlockSize{8, 8});
        for (int r = 0; r < 8; ++r) {
          for (int c = 0; c < 8; ++c) {
            CHECK(std::abs(out2.at(c, r) -
                           DirectionalOracle(edges, mode.angle(), r, c)) <= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("angle delta is rejected below 8x8") {
  const IntraEdges edges = ConstantEdges(1, BlockSize{4, 4});
  CHECK_THROWS_AS(
      PredictDirectional(edges, DirectionalMode{0, 1}, BlockSize{4, 4}),
      std::invalid_argument);
  CHECK_NOTHROW(PredictDirectional(edges, DirectionalMode{0, 0}, BlockSize{4, 4}));
}

TEST_CASE("smooth variants: constant edges give a constant block") {
  const IntraEdges edges = ConstantEdges(77, BlockSize{8, 16});
  for (auto variant : {SmoothVariant::kVertical, SmoothVariant::kHorizontal,
                       SmoothVariant::kBoth}) {
    const PixelGrid out = PredictSmooth(edges, variant, BlockSize{8, 16});
    for (const auto& v : out.data()) CHECK(v == 77);
  }
}

TEST_CASE("smooth horizontal interpolates from left toward top-right") {
  std::vector<uint16_t> above(8, 64);
  std::vector<uint16_t> left(8, 0);
  IntraEdges edges(above, left, 0, 8);
  const PixelGrid out =
      PredictSmooth(edges, SmoothVariant::kHorizontal, BlockSize{4, 4});
  for (int r = 0; r < 4; ++r) {
    // Weight of L dominates at x=0 and decays monotonically toward TR.
    CHECK(out.at(0, r) <= 16);
    CHECK(out.at(3, r) >= 32);
    for (int c = 1; c < 4; ++c) CHECK(out.at(c, r) >= out.at(c - 1, r));
  }
}

TEST_CASE("smooth equals the rounded average of its directional variants") {
  auto rng = test::Rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    const IntraEdges edges = MakeEdges(rng, BlockSize{16, 8}, 10);
    const PixelGrid ph = PredictSmooth(edges, SmoothVariant::kHorizontal,
                                       BlockSize{16, 8});
    const PixelGrid pv =
        PredictSmooth(edges, SmoothVariant::kVertical, BlockSize{16, 8});
    const PixelGrid p = PredictSmooth(edges, SmoothVariant::kBoth, BlockSize{16, 8});
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 16; ++c) {
        CHECK(p.at(c, r) == (ph.at(c, r) + pv.at(c, r) + 1) / 2);
      }
    }
  }
}

TEST_CASE("smooth output stays within the reference range") {
  auto rng = test::Rng(8);
  for (int iter = 0; iter < 20; ++iter) {
    const IntraEdges edges = MakeEdges(rng, BlockSize{8, 8}, 8);
    uint16_t lo = 255, hi = 0;
    for (int i = -1; i < 16; ++i) {
      lo = std::min({lo, edges.above(i), edges.left(i)});
      hi = std::max({hi, edges.above(i), edges.left(i)});
    }
    for (auto variant : {SmoothVariant::kVertical, SmoothVariant::kHorizontal,
                         SmoothVariant::kBoth}) {
      const PixelGrid out = PredictSmooth(edges, variant, BlockSize{8, 8});
      for (const auto& v : out.data()) {
        CHECK(v >= lo);
        CHECK(v <= hi);
      }
    }
  }
}

TEST_CASE("paeth picks the nearest of T, L, TL") {
  // T=10, L=20, TL=15: base 15, TL wins the tie-break via exact distance 0.
  IntraEdges e1(std::vector<uint16_t>(8, 10), std::vector<uint16_t>(8, 20), 15, 8);
  CHECK(PredictPaeth(e1, BlockSize{4, 4}).at(0, 0) == 15);

  IntraEdges e2(std::vector<uint16_t>(8, 7), std::vector<uint16_t>(8, 7), 7, 8);
  CHECK(PredictPaeth(e2, BlockSize{4, 4}).at(2, 2) == 7);

  IntraEdges e3(std::vector<uint16_t>(8, 100), std::vector<uint16_t>(8, 50), 50, 8);
  CHECK(PredictPaeth(e3, BlockSize{4, 4}).at(1, 3) == 100);
}

TEST_CASE("paeth output is always one of its references") {
  auto rng = test::Rng(9);
  for (int iter = 0; iter < 25; ++iter) {
    const IntraEdges edges = MakeEdges(rng, BlockSize{8, 8}, 8);
    const PixelGrid out = PredictPaeth(edges, BlockSize{8, 8});
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        const uint16_t v = out.at(c, r);
        CHECK((v == edges.above(c) || v == edges.left(r) ||
               v == edges.top_left()));
      }
    }
  }
}

TEST_CASE("recursive filter: degenerate sets copy along one axis") {
  auto rng = test::Rng(10);
  const IntraEdges edges = MakeEdges(rng, BlockSize{8, 8}, 8);
  // Set 1 (alpha=1) chains from the above references: columns replicate.
  const PixelGrid vert = PredictRecursiveFilter(edges, 1, BlockSize{8, 8});
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(vert.at(c, r) == edges.above(c));
  }
  // Set 2 (beta=1) chains from the left references: rows replicate.
  const PixelGrid horz = PredictRecursiveFilter(edges, 2, BlockSize{8, 8});
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(horz.at(c, r) == edges.left(r));
  }
}

TEST_CASE("recursive filter: normalized sets keep constants") {
  for (int set = 0; set < kRecursiveFilterSets; ++set) {
    const RecursiveFilterCoeffs& cf = RecursiveFilterSet(set);
    CHECK(cf.alpha_q6 + cf.beta_q6 + cf.gamma_q6 == 64);
    const IntraEdges edges = ConstantEdges(200, BlockSize{8, 8});
    const PixelGrid out = PredictRecursiveFilter(edges, set, BlockSize{8, 8});
    for (const auto& v : out.data()) CHECK(v == 200);
  }
}

TEST_CASE("recursive filter equals the per-pixel recursion bit-exactly") {
  auto rng = test::Rng(11);
  for (int set = 0; set < kRecursiveFilterSets; ++set) {
    for (int iter = 0; iter < 50; ++iter) {
      const BlockSize size = (iter & 1) ? BlockSize{8, 8} : BlockSize{16, 8};
      const IntraEdges edges = MakeEdges(rng, size, (iter % 3 == 0) ? 10 : 8);
      CHECK(PredictRecursiveFilter(edges, set, size) ==
            RecursiveOracle(edges, set, size));
    }
  }
  CHECK_THROWS_AS(PredictRecursiveFilter(ConstantEdges(0, BlockSize{8, 8}), 5,
                                          BlockSize{8, 8}),
                  std::invalid_argument);
}

TEST_CASE("intensity shift covariance") {
  auto rng = test::Rng(12);
  const BlockSize size{8, 8};
  // 12-bit headroom with 10-bit content keeps every predictor away from the
  // clamp, where the covariance is mathematically guaranteed.
  std::uniform_int_distribution<int> d(0, 1023);
  std::vector<uint16_t> above(2 * size.width), left(2 * size.height);
  for (auto& v : above) v = static_cast<uint16_t>(d(rng));
  for (auto& v : left) v = static_cast<uint16_t>(d(rng));
  const IntraEdges edges(above, left, static_cast<uint16_t>(d(rng)), 12);
  const IntraEdges shifted = edges.Shifted(37);
  for (int base = 0; base < 8; ++base) {
    const DirectionalMode mode{base, 2};
    const PixelGrid a = PredictDirectional(edges, mode, size);
    const PixelGrid b = PredictDirectional(shifted, mode, size);
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(b.data()[i] == a.data()[i] + 37);
    }
  }
  for (auto variant : {SmoothVariant::kVertical, SmoothVariant::kHorizontal,
                       SmoothVariant::kBoth}) {
    const PixelGrid a = PredictSmooth(edges, variant, size);
    const PixelGrid b = PredictSmooth(shifted, variant, size);
    for (size_t i = 0; i < a.size(); ++i) CHECK(b.data()[i] == a.data()[i] + 37);
  }
  {
    const PixelGrid a = PredictPaeth(edges, size);
    const PixelGrid b = PredictPaeth(shifted, size);
    for (size_t i = 0; i < a.size(); ++i) CHECK(b.data()[i] == a.data()[i] + 37);
  }
  for (int set = 0; set < kRecursiveFilterSets; ++set) {
    const PixelGrid a = PredictRecursiveFilter(edges, set, size);
    const PixelGrid b = PredictRecursiveFilter(shifted, set, size);
    for (size_t i = 0; i < a.size(); ++i) CHECK(b.data()[i] == a.data()[i] + 37);
  }
}

TEST_CASE("chroma from luma follows the DC plus scaled AC pipeline") {
  PixelGrid luma(2, 2);
  luma.at(0, 0) = 100;
  luma.at(1, 0) = 120;
  luma.at(0, 1) = 140;
  luma.at(1, 1) = 180;
  const PixelGrid dc(2, 2, 128);
  const PixelGrid out = PredictCfl(luma, dc, 64, 8);  // scaling +1.0
  CHECK(out.at(0, 0) == 93);
  CHECK(out.at(1, 0) == 113);
  CHECK(out.at(0, 1) == 133);
  CHECK(out.at(1, 1) == 173);

  // Zero scaling reproduces the DC prediction exactly.
  CHECK(PredictCfl(luma, dc, 0, 8) == dc);
  // Constant luma has no AC contribution.
  const PixelGrid flat(4, 4, 500);
  const PixelGrid dc2(4, 4, 300);
  CHECK(PredictCfl(flat, dc2, 64, 10) == dc2);
}

TEST_CASE("palette reconstruct and fit") {
  Palette two;
  two.base_colors = {10, 200};
  two.index_map = Grid<uint8_t>(4, 4, 0);
  two.index_map.at(3, 3) = 1;
  const PixelGrid rec = PaletteReconstruct(two);
  CHECK(rec.at(0, 0) == 10);
  CHECK(rec.at(3, 3) == 200);

  // A block matching its palette exactly round-trips losslessly.
  const Palette refit = PaletteFit(rec, 2);
  CHECK(PaletteReconstruct(refit) == rec);

  // All-constant block: every base color equals the constant.
  const PixelGrid flat(4, 4, 42);
  for (int k = 2; k <= 8; ++k) {
    const Palette p = PaletteFit(flat, k);
    for (uint8_t idx : p.index_map.data()) CHECK(p.base_colors[idx] == 42);
  }

  CHECK_THROWS_AS(PaletteFit(flat, 1), std::invalid_argument);
  CHECK_THROWS_AS(PaletteFit(flat, 9), std::invalid_argument);
}

TEST_CASE("palette fit maps every pixel to its nearest base color") {
  PixelGrid grad(8, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      grad.at(x, y) = static_cast<uint16_t>((y * 8 + x) * 255 / 63);
    }
  }
  const Palette p = PaletteFit(grad, 8);
  int max_gap = 0;
  for (size_t i = 1; i < p.base_colors.size(); ++i) {
    max_gap = std::max(max_gap, p.base_colors[i] - p.base_colors[i - 1]);
  }
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      const int v = grad.at(x, y);
      const int got = p.base_colors[p.index_map.at(x, y)];
      int best = 1 << 20;
      for (uint16_t c : p.base_colors) best = std::min(best, std::abs(v - c));
      CHECK(std::abs(v - got) == best);           // assignment optimality
      CHECK(2 * std::abs(v - got) <= max_gap + 1);  // interior gap bound
    }
  }
}

TEST_CASE("intra block copy") {
  auto rng = test::Rng(13);
  Plane plane = test::RandomPlane(rng, 32, 32, 8);
  const Rect coded{0, 0, 32, 16};  // top half already coded

  // Full-pel copy reproduces the source patch exactly.
  const PixelGrid copy =
      IntraBcCopy(plane, coded, MotionVector{-8, 0}, 0, 8, 8, 8);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) CHECK(copy.at(c, r) == plane.at(c, r));
  }

  // Pointing into the uncoded area is rejected.
  CHECK_THROWS_AS(IntraBcCopy(plane, coded, MotionVector{-2, 0}, 0, 14, 8, 8),
                  std::invalid_argument);

  // Odd luma displacement on a 4:2:0 chroma plane lands at a half-pel
  // position and bilinearly averages the straddling samples.
  Plane chroma(16, 16, 8, 1, 1);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      chroma.at(x, y) = static_cast<uint16_t>(x * 10);
    }
  }
  const PixelGrid half = IntraBcCopy(chroma, Rect{0, 0, 16, 16},
                                     MotionVector{0, -3}, 8, 8, 4, 4);
  // Plane displacement is -1.5: average of samples at x-2 and x-1.
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int expect = ((8 + c - 2) * 10 + (8 + c - 1) * 10 + 1) / 2;
      CHECK(half.at(c, r) == expect);
    }
  }
}

TEST_CASE("edge gathering replicates unavailable regions") {
  Plane plane(16, 16, 8);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) plane.at(x, y) = static_cast<uint16_t>(y * 16 + x);
  }
  const Rect avail{0, 0, 16, 16};
  // Top-left block: nothing coded above or left, mid-gray everywhere.
  const IntraEdges e0 = IntraEdges::Gather(plane, avail, 0, 0, BlockSize{4, 4});
  CHECK(e0.above(0) == 128);
  CHECK(e0.left(3) == 128);
  CHECK(e0.top_left() == 128);

  // Interior block gets real neighbors; the above row extends with clamping.
  const IntraEdges e1 = IntraEdges::Gather(plane, avail, 8, 8, BlockSize{4, 4});
  CHECK(e1.above(0) == plane.at(8, 7));
  CHECK(e1.above(7) == plane.at(15, 7));   // true above-right samples
  CHECK(e1.top_left() == plane.at(7, 7));
  CHECK(e1.left(2) == plane.at(7, 10));

  // First row: above replicated from the left column.
  const IntraEdges e2 = IntraEdges::Gather(plane, avail, 8, 0, BlockSize{4, 4});
  CHECK(e2.above(5) == e2.left(0));
}

TEST_SUITE_END();

}  // namespace
}  // namespace av1lab
