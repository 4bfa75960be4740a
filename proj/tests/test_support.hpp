#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"

namespace chromospan::testing {

inline PointSet random_points(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointSet pts;
  while (pts.size() < n) {
    const Point p{unit(rng), unit(rng)};
    bool fresh = true;
    for (const Point& q : pts) fresh = fresh && !(q == p);
    if (fresh) pts.push_back(p);
  }
  return pts;
}

inline Coloring random_coloring(std::uint64_t seed, std::size_t n, int k) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, k);
  Coloring c{k, {}};
  for (std::size_t i = 0; i < n; ++i) c.colors.push_back(pick(rng));
  return c;
}

}  // namespace chromospan::testing

namespace chromospan::testing {

/// Plain triple loop over (pair, intermediate). Independent of the library's
/// pruned evaluation; +inf when a same-colored pair has no intermediate.
inline double naive_stretch(const PointSet& pts, const std::vector<Color>& colors) {
  double worst = 1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (colors[i] != colors[j]) continue;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < pts.size(); ++r) {
        if (colors[r] == colors[i]) continue;
        const double via = std::hypot(pts[i].x - pts[r].x, pts[i].y - pts[r].y) +
                           std::hypot(pts[r].x - pts[j].x, pts[r].y - pts[j].y);
        best = std::min(best, via);
      }
      worst = std::max(worst, best / std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
    }
  }
  return worst;
}

}  // namespace chromospan::testing
