#include "chromospan/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chromospan/analysis.hpp"

namespace chromospan {

namespace {

constexpr double kPi = std::numbers::pi;

void require_odd(int n) {
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::BadN, "n must be odd and at least 3");
  }
}

PointSet polygon(int n, double radius) {
  PointSet pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

double unit_side_radius(int n) { return 0.5 / std::sin(kPi / n); }

}  // namespace

PointSet regular_polygon_unit_side(int n) {
  if (n < 3) throw Error(ErrorCode::BadN, "polygon needs at least 3 vertices");
  return polygon(n, unit_side_radius(n));
}

PointSet regular_polygon_unit_radius(int n) {
  if (n < 3) throw Error(ErrorCode::BadN, "polygon needs at least 3 vertices");
  return polygon(n, 1.0);
}

LowerBoundInstance gen_lb_k2(int n) {
  require_odd(n);
  return {regular_polygon_unit_side(n), 2,
          1.0 + 2.0 * std::sin((n - 2) * kPi / (2.0 * n)),
          "1 + 2 sin((n-2) pi / 2n)", false};
}

LowerBoundInstance gen_lb_k3(int n) {
  require_odd(n);
  PointSet pts = regular_polygon_unit_side(n);
  const double apex_height = std::sqrt(3.0) / 2.0;
  for (int i = 0; i < n; ++i) {
    const Point& a = pts[static_cast<std::size_t>(i)];
    const Point& b = pts[static_cast<std::size_t>((i + 1) % n)];
    const Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    const double len = std::hypot(mid.x, mid.y);
    pts.push_back({mid.x + apex_height * mid.x / len,
                   mid.y + apex_height * mid.y / len});
  }
  const double inner = 1.0 / std::sin((n + 6) * kPi / (6.0 * n));
  return {std::move(pts), 3, std::min(2.0, inner),
          "min(2, 1 / sin((n+6) pi / 6n))", false};
}

LowerBoundInstance gen_lb_k4(int n) {
  require_odd(n);
  PointSet pts = regular_polygon_unit_side(n);
  const double r = unit_side_radius(n);
  const double scale = (r + 1.0) / r;
  for (int i = 0; i < n; ++i) {
    const Point& p = pts[static_cast<std::size_t>(i)];
    pts.push_back({p.x * scale, p.y * scale});
  }
  return {std::move(pts), 4, 1.0 / std::sin((n + 2) * kPi / (4.0 * n)),
          "1 / sin((n+2) pi / 4n)", false};
}

LowerBoundInstance gen_lb_kgon(int k) {
  if (k <= 4) throw Error(ErrorCode::BadK, "k-gon construction needs k > 4");
  return {regular_polygon_unit_side(k + 1), k, 1.0 / std::cos(kPi / (k + 1)),
          "1 / cos(pi / (k+1))", false};
}

LowerBoundInstance gen_online_lb(int k) {
  if (k < 4) throw Error(ErrorCode::BadK, "online lower bound needs k >= 4");
  if (k == 4) {
    PointSet pts{{0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.0, 0.0}};
    return {std::move(pts), 4, 1.0 + std::numbers::sqrt2,
            "1 + sqrt(2) (square arrives rainbow)", true};
  }
  PointSet pts = regular_polygon_unit_radius(k);
  pts.push_back({0.0, 0.0});
  return {std::move(pts), k, 1.0 / std::cos(kPi / k), "1 / cos(pi / k)", true};
}

LowerBoundInstance gen_online_probe_k3() {
  PointSet pts = regular_polygon_unit_radius(3);
  pts.push_back({0.0, 0.0});
  return {std::move(pts), 3, 1.0 + std::sqrt(3.0),
          "1 + sqrt(3) (not forced by this probe)", true};
}

AdversaryOutcome run_adversary(int k, const OnlineAlgorithm& algorithm) {
  return run_adversary(gen_online_lb(k), algorithm);
}

AdversaryOutcome run_adversary(const LowerBoundInstance& instance,
                               const OnlineAlgorithm& algorithm) {
  AdversaryOutcome out;
  out.coloring.k = instance.k;
  for (const Point& p : instance.points) {
    out.coloring.colors.push_back(algorithm(p));
    const std::size_t m = out.coloring.size();
    const StretchReport prefix = stretch_factor(
        std::span<const Point>(instance.points).first(m), out.coloring);
    out.peak_stretch = std::max(out.peak_stretch, prefix.stretch);
    out.final_stretch = prefix.stretch;
  }
  return out;
}

}  // namespace chromospan
