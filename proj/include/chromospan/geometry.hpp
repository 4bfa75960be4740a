#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chromospan/error.hpp"

namespace chromospan {

/// Slack used when a metric quantity (distance, detour, angle) is compared
/// against a stretch bound. Topological decisions never use it.
inline constexpr double kGeoEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class CirclePosition { Outside = -1, On = 0, Inside = 1 };

/// Sign of the signed area of (p, q, r). Exact for all finite doubles.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Position of d relative to the circle through a, b, c. Exact.
/// Throws Error{ErrorCode::CollinearBase} when a, b, c are collinear.
CirclePosition in_circle(const Point& a, const Point& b, const Point& c,
                         const Point& d);

/// in_circle with cocircular ties resolved by lifting each point i by an
/// infinitesimal that shrinks with i (lower index lifted higher). Never
/// returns On for four distinct points; requires a, b, c non-collinear.
CirclePosition in_circle_perturbed(std::span<const Point> pts, std::size_t a,
                                   std::size_t b, std::size_t c, std::size_t d);

/// True when r lies on the closed segment [p, q] (exact).
bool on_segment(const Point& p, const Point& q, const Point& r);

/// True when open segments (a,b) and (c,d) cross at a single interior point.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d);

double distance(const Point& p, const Point& q);
double squared_distance(const Point& p, const Point& q);

/// (|pr| + |rq|) / |pq|.
double detour(const Point& p, const Point& r, const Point& q);

/// Unsigned angle at apex between rays apex->u and apex->v, in [0, pi].
double angle_at(const Point& apex, const Point& u, const Point& v);

/// Half-open angular sector. Membership includes the start ray and
/// excludes the end ray; angles sweep counter-clockwise from start_angle.
struct Cone {
  Point apex;
  double start_angle = 0.0;
  double width = 0.0;

  Cone(Point apex, double start_angle, double width);
  bool contains(const Point& q) const;
};

/// Index of the downward cone of apex containing q, for the k-1 cones of
/// width pi/(k-1) that sweep the closed lower half-plane clockwise from the
/// leftward horizontal ray. Cones are half-open except the last, which also
/// holds the rightward ray. Points at the apex's height count as below.
/// Returns nullopt when q is strictly above apex or equal to it.
std::optional<std::size_t> cone_index(const Point& apex, const Point& q,
                                      std::size_t k);

/// Throws DuplicatePoints if any two points coincide, InvalidArgument if a
/// coordinate is not finite.
void require_distinct(std::span<const Point> pts);

}  // namespace chromospan
