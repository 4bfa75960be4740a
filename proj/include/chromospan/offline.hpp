#pragma once

#include <span>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"
#include "chromospan/graph.hpp"

namespace chromospan {

/// Graph built by the 2-ellipse edge filter. Edges are kept in insertion
/// order, i.e. non-decreasing length.
struct EllipseGraph {
  PointSet points;
  EdgeSet edges;
};

struct EllipseColoring {
  Coloring coloring;
  EllipseGraph graph;
};

// Worst-case stretch guaranteed by each algorithm.
double mst2_bound();
double ellipse3_bound();
double delaunay4_bound();
/// 1 + 2 sin(pi / (2k - 2)).
double cones_bound(int k);

/// Two colors: bipartition of the Euclidean MST, BFS from index 0.
Coloring color_mst_2(std::span<const Point> points);

/// Three colors: pairs are scanned by non-decreasing length (ties by index
/// pair); a pair becomes an edge unless an existing edge has both endpoints
/// in its closed 2-ellipse. The resulting graph is 3-colored exactly.
EllipseColoring color_ellipse_3(std::span<const Point> points);

/// Four colors: exact 4-coloring of the Delaunay triangulation.
Coloring color_delaunay_4(std::span<const Point> points);

/// k colors via downward cones: points are processed by (y, x, index); each
/// takes the smallest color unused by its nearest earlier point in each of
/// the k-1 cones below it.
Coloring color_cones_k(std::span<const Point> points, int k);

struct ConesTrace {
  Coloring coloring;
  std::vector<std::size_t> order;                 // processing order
  std::vector<std::vector<std::size_t>> selected;  // per point, <= k-1 entries
};

/// color_cones_k that also reports the neighbors each point looked at.
ConesTrace color_cones_k_traced(std::span<const Point> points, int k);

}  // namespace chromospan
