// Shared test fixtures: deterministic RNG helpers and synthetic content.
#ifndef AV1LAB_TESTS_FIXTURES_H_
#define AV1LAB_TESTS_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <random>

#include "av1lab/frame.h"

namespace av1lab::test {

inline std::mt19937 Rng(uint32_t seed = 0x5eed) { return std::mt19937(seed); }

inline PixelGrid RandomBlock(std::mt19937& rng, int w, int h, int bit_depth) {
  std::uniform_int_distribution<int> d(0, (1 << bit_depth) - 1);
  PixelGrid g(w, h);
  for (auto& s : g.data()) s = static_cast<uint16_t>(d(rng));
  return g;
}

inline Grid<int32_t> RandomResidual(std::mt19937& rng, int w, int h,
                                    int max_abs) {
  std::uniform_int_distribution<int> d(-max_abs, max_abs);
  Grid<int32_t> g(w, h);
  for (auto& s : g.data()) s = d(rng);
  return g;
}

inline Plane RandomPlane(std::mt19937& rng, int w, int h, int bit_depth) {
  Plane p(w, h, bit_depth);
  std::uniform_int_distribution<int> d(0, (1 << bit_depth) - 1);
  for (auto& s : p.samples().data()) s = static_cast<uint16_t>(d(rng));
  return p;
}

// Smooth pseudo-natural content: a sum of gentle 2-D sinusoids plus a touch
// of seeded noise, so prediction and transforms have realistic material.
inline Frame SyntheticNaturalFrame(int w, int h, int bit_depth,
                                   ChromaFormat format, uint32_t seed = 7) {
  Frame f(w, h, bit_depth, format);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> noise(-2, 2);
  const int mid = 1 << (bit_depth - 1);
  const double amp = mid * 0.6;
  for (int p = 0; p < f.plane_count(); ++p) {
    Plane& plane = f.plane(p);
    const double fx = 2.3 + p, fy = 1.7 + 0.5 * p;
    for (int y = 0; y < plane.height(); ++y) {
      for (int x = 0; x < plane.width(); ++x) {
        const double u = static_cast<double>(x) / plane.width();
        const double v = static_cast<double>(y) / plane.height();
        double s = mid + amp * 0.5 * std::sin(6.28318 * fx * u) *
                             std::cos(6.28318 * fy * v) +
                   amp * 0.3 * std::sin(6.28318 * (u + v));
        int val = static_cast<int>(std::lround(s)) + noise(rng);
        plane.at(x, y) = ClampPixel(val, bit_depth);
      }
    }
  }
  return f;
}

}  // namespace av1lab::test

#endif  // AV1LAB_TESTS_FIXTURES_H_
