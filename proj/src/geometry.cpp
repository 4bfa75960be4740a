#include "chromospan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace chromospan {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CollinearBase: return "CollinearBase";
    case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::AllCollinear: return "AllCollinear";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::ColoringSearchFailed: return "ColoringSearchFailed";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
// Forward error bounds for the straightforward double evaluation.
constexpr double kOrientBound = (3.0 + 16.0 * kUnitRoundoff) * kUnitRoundoff;
constexpr double kInCircleBound = (10.0 + 96.0 * kUnitRoundoff) * kUnitRoundoff;

int sign_of(const Rational& v) { return v.sign(); }

int orient_sign(const Point& p, const Point& q, const Point& r) {
  const double left = (q.x - p.x) * (r.y - p.y);
  const double right = (q.y - p.y) * (r.x - p.x);
  const double det = left - right;
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;

  const Rational px(p.x), py(p.y);
  const Rational exact = (Rational(q.x) - px) * (Rational(r.y) - py) -
                         (Rational(q.y) - py) * (Rational(r.x) - px);
  return sign_of(exact);
}

// Positive when d is inside the circle through a, b, c given (a, b, c) CCW;
// the sign flips for CW.
int in_circle_det_sign(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent =
      (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
      (std::abs(cdxady) + std::abs(adxcdy)) * blift +
      (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kInCircleBound * permanent;
  if (det > bound) return 1;
  if (-det > bound) return -1;

  const Rational dx(d.x), dy(d.y);
  const Rational eadx = Rational(a.x) - dx, eady = Rational(a.y) - dy;
  const Rational ebdx = Rational(b.x) - dx, ebdy = Rational(b.y) - dy;
  const Rational ecdx = Rational(c.x) - dx, ecdy = Rational(c.y) - dy;
  const Rational exact =
      (eadx * eadx + eady * eady) * (ebdx * ecdy - ecdx * ebdy) +
      (ebdx * ebdx + ebdy * ebdy) * (ecdx * eady - eadx * ecdy) +
      (ecdx * ecdx + ecdy * ecdy) * (eadx * ebdy - ebdx * eady);
  return sign_of(exact);
}

void require_finite(const Point& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw Error(ErrorCode::InvalidArgument, "point coordinate is not finite");
  }
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(orient_sign(p, q, r));
}

CirclePosition in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& d) {
  const int orient = orient_sign(a, b, c);
  if (orient == 0) {
    throw Error(ErrorCode::CollinearBase, "circle base points are collinear");
  }
  return static_cast<CirclePosition>(orient * in_circle_det_sign(a, b, c, d));
}

CirclePosition in_circle_perturbed(std::span<const Point> pts, std::size_t a,
                                   std::size_t b, std::size_t c,
                                   std::size_t d) {
  const CirclePosition exact = in_circle(pts[a], pts[b], pts[c], pts[d]);
  if (exact != CirclePosition::On) return exact;

  // Cocircular: the largest lift belongs to the lowest index. Lifting d
  // pushes it outside; lifting a base vertex v raises the lifted plane at d
  // by the barycentric weight of v at d, which pulls d inside when positive.
  const std::size_t lowest = std::min({a, b, c, d});
  if (lowest == d) return CirclePosition::Outside;

  const int base = orient_sign(pts[a], pts[b], pts[c]);
  int weight = 0;
  if (lowest == a) {
    weight = orient_sign(pts[d], pts[b], pts[c]);
  } else if (lowest == b) {
    weight = orient_sign(pts[a], pts[d], pts[c]);
  } else {
    weight = orient_sign(pts[a], pts[b], pts[d]);
  }
  return weight * base > 0 ? CirclePosition::Inside : CirclePosition::Outside;
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  if (orient_sign(p, q, r) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double squared_distance(const Point& p, const Point& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

double detour(const Point& p, const Point& r, const Point& q) {
  if (p == q) {
    throw Error(ErrorCode::CoincidentEndpoints, "detour endpoints coincide");
  }
  return (distance(p, r) + distance(r, q)) / distance(p, q);
}

double angle_at(const Point& apex, const Point& u, const Point& v) {
  if (u == apex || v == apex) {
    throw Error(ErrorCode::DegenerateRay, "angle ray has zero length");
  }
  const double ux = u.x - apex.x, uy = u.y - apex.y;
  const double vx = v.x - apex.x, vy = v.y - apex.y;
  const double cross = ux * vy - uy * vx;
  const double dot = ux * vx + uy * vy;
  return std::abs(std::atan2(cross, dot));
}

Cone::Cone(Point apex_, double start, double w)
    : apex(apex_), start_angle(start), width(w) {
  if (!(w > 0.0) || w > std::numbers::pi) {
    throw Error(ErrorCode::InvalidArgument, "cone width must be in (0, pi]");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  start_angle = std::fmod(start_angle, kTwoPi);
  if (start_angle < 0.0) start_angle += kTwoPi;
}

bool Cone::contains(const Point& q) const {
  if (q == apex) return false;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double offset = std::atan2(q.y - apex.y, q.x - apex.x) - start_angle;
  offset = std::fmod(offset, kTwoPi);
  if (offset < 0.0) offset += kTwoPi;
  return offset < width;
}

std::optional<std::size_t> cone_index(const Point& apex, const Point& q,
                                      std::size_t k) {
  if (k < 2) throw Error(ErrorCode::BadK, "cone_index needs k >= 2");
  if (q == apex || q.y > apex.y) return std::nullopt;

  const double dx = q.x - apex.x;
  const double dy = q.y - apex.y;
  // Clockwise sweep position from the leftward ray, in [0, pi].
  double sweep = 0.0;
  if (dy == 0.0) {
    sweep = dx < 0.0 ? 0.0 : std::numbers::pi;
  } else {
    sweep = std::atan2(-dy, -dx);
  }
  const std::size_t cones = k - 1;
  const double width = std::numbers::pi / static_cast<double>(cones);
  const auto index = static_cast<std::size_t>(std::floor(sweep / width));
  return std::min(index, cones - 1);
}

void require_distinct(std::span<const Point> pts) {
  std::set<std::pair<double, double>> seen;
  for (const Point& p : pts) {
    require_finite(p);
    // -0.0 and 0.0 compare equal as doubles, and as set keys.
    if (!seen.emplace(p.x, p.y).second) {
      throw Error(ErrorCode::DuplicatePoints, "input contains duplicate points");
    }
  }
}

}  // namespace chromospan
