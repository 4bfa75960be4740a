#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"
#include "chromospan/graph.hpp"

namespace chromospan {

/// Stretch of a graph or of a coloring's complete k-partite graph.
/// An unbounded stretch (some pair cannot be connected) is stored as +inf
/// with `unbounded` set; it never arises from arithmetic overflow.
struct StretchReport {
  double stretch = 1.0;
  bool unbounded = false;
  std::optional<Edge> worst_pair;
  std::optional<std::size_t> witness;  // best intermediate for worst_pair

  static StretchReport infinite(Edge pair) {
    return {std::numeric_limits<double>::infinity(), true, pair, std::nullopt};
  }
};

/// Stretch of K_c(P). Same-colored pairs are served by their best single
/// differently colored intermediate; any longer path in K_c(P) shortcuts to
/// one of those, so this equals the shortest-path stretch.
StretchReport stretch_factor(std::span<const Point> points,
                             const Coloring& coloring);

/// Max over all pairs of shortest-path length over Euclidean distance, by
/// Dijkstra from every vertex.
StretchReport dijkstra_stretch(std::span<const Point> points,
                               const EdgeSet& edges);

/// Every edge between differently colored points.
EdgeSet bichromatic_edges(const Coloring& coloring);

/// True when every same-colored pair (p, q) has a differently colored r with
/// |pr| + |rq| <= (t + kGeoEps) |pq|.
bool has_ellipse_property(std::span<const Point> points,
                          const Coloring& coloring, double t);

/// No two edges cross at an interior point and no edge passes through a
/// vertex other than its endpoints. Exact.
bool is_plane_graph(std::span<const Point> points, const EdgeSet& edges);

bool is_triangle_free(const EdgeSet& edges);

struct OptimalColoring {
  Coloring coloring;
  double stretch = 1.0;
};

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// Minimum stretch over all k-colorings with point 0 fixed to color 1,
/// enumerated lexicographically; the first minimizer is returned. Throws
/// BudgetExceeded when k^(n-1) exceeds `budget`.
OptimalColoring optimal_coloring_bruteforce(
    std::span<const Point> points, int k,
    std::uint64_t budget = kDefaultBruteForceBudget);

/// Sparse subgraph of K_c(P) built by path-greedy over bichromatic pairs.
struct SparseSpanner {
  PointSet points;
  Coloring coloring;
  EdgeSet edges;
  double epsilon = 0.0;
};

/// Bichromatic pairs are scanned by non-decreasing length; a pair becomes an
/// edge only if the current graph distance exceeds (1 + epsilon)|pq|.
/// Throws InvalidArgument unless epsilon > 0.
SparseSpanner sparsify_greedy(std::span<const Point> points,
                              const Coloring& coloring, double epsilon);

}  // namespace chromospan
