#pragma once

#include <functional>
#include <string>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"

namespace chromospan {

/// A point set (or arrival sequence, when `online`) on which no k-coloring
/// beats `analytic_bound`.
struct LowerBoundInstance {
  PointSet points;
  int k = 0;
  double analytic_bound = 1.0;
  std::string bound_formula;
  bool online = false;
};

/// Vertices of a regular n-gon with unit side, centered at the origin, CCW
/// from the positive x-axis.
PointSet regular_polygon_unit_side(int n);

/// Vertices of a regular n-gon with unit circumradius, centered at the origin.
PointSet regular_polygon_unit_radius(int n);

/// Odd regular n-gon; every 2-coloring has stretch >= 1 + 2 sin((n-2)pi/2n).
LowerBoundInstance gen_lb_k2(int n);

/// Odd n-gon plus the apexes of outward equilateral triangles on its sides.
LowerBoundInstance gen_lb_k3(int n);

/// Two radially aligned concentric odd n-gons, the outer one pushed out so
/// the radial gap equals the inner side length.
LowerBoundInstance gen_lb_k4(int n);

/// Regular (k+1)-gon, for k > 4.
LowerBoundInstance gen_lb_kgon(int k);

/// Online arrival sequence: for k >= 5 a regular k-gon then its center; for
/// k = 4 a square then its center (bound 1 + sqrt 2 holds when the square
/// arrives rainbow-colored).
LowerBoundInstance gen_online_lb(int k);

/// Equilateral triangle then its center. Not a proven adversary for k = 3;
/// the achieved stretch is reported for inspection only.
LowerBoundInstance gen_online_probe_k3();

using OnlineAlgorithm = std::function<Color(const Point&)>;

struct AdversaryOutcome {
  Coloring coloring;
  double final_stretch = 1.0;
  /// Largest stretch of any arrival prefix, final state included.
  double peak_stretch = 1.0;
};

/// Feeds the gen_online_lb(k) sequence to `algorithm` and measures the
/// stretch of the colorings it produces. Requires k >= 4.
AdversaryOutcome run_adversary(int k, const OnlineAlgorithm& algorithm);

/// Same, for an explicit instance.
AdversaryOutcome run_adversary(const LowerBoundInstance& instance,
                               const OnlineAlgorithm& algorithm);

}  // namespace chromospan
