#pragma once

#include <span>

#include "chromospan/geometry.hpp"
#include "chromospan/graph.hpp"

namespace chromospan {

/// Delaunay triangulation. Four or more cocircular points are resolved by a
/// symbolic lifting perturbation (see in_circle_perturbed), so the result is
/// unique for a given point order.
struct Triangulation {
  PointSet points;
  EdgeSet edges;               // sorted, includes hull edges
  std::vector<Triangle> triangles;  // each sorted ascending; list sorted
};

struct SpanningTree {
  PointSet points;
  EdgeSet edges;  // in the order Prim added them
};

/// Needs >= 3 pairwise distinct, not all collinear points. Throws
/// TooFewPoints, DuplicatePoints or AllCollinear.
Triangulation delaunay(std::span<const Point> points);

/// Euclidean minimum spanning tree via Prim on the complete graph. Equal
/// lengths are broken by the lexicographically smaller index pair.
SpanningTree emst(std::span<const Point> points);

}  // namespace chromospan
