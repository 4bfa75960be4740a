#include "chromospan/offline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>

#include "chromospan/proximity.hpp"

namespace chromospan {

double mst2_bound() { return 3.0; }
double ellipse3_bound() { return 2.0; }
double delaunay4_bound() { return std::numbers::sqrt2; }

double cones_bound(int k) {
  if (k < 2) throw Error(ErrorCode::BadK, "k must be at least 2");
  return 1.0 + 2.0 * std::sin(std::numbers::pi / (2.0 * k - 2.0));
}

Coloring color_mst_2(std::span<const Point> points) {
  const SpanningTree tree = emst(points);
  const std::size_t n = points.size();
  Coloring out{2, std::vector<Color>(n, 0)};
  if (n == 0) return out;

  const AdjacencyList adj = adjacency(n, tree.edges);
  std::queue<std::size_t> frontier;
  out.colors[0] = 1;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t w : adj[v]) {
      if (out.colors[w] != 0) continue;
      out.colors[w] = 3 - out.colors[v];
      frontier.push(w);
    }
  }
  return out;
}

namespace {

// Relative slack on the closed ellipse test so that exact ties survive
// rounding in the three square roots.
constexpr double kEllipseSlack = 1e-12;

}  // namespace

EllipseColoring color_ellipse_3(std::span<const Point> points) {
  require_distinct(points);
  const std::size_t n = points.size();

  struct Candidate {
    double len;
    Edge edge;
  };
  std::vector<Candidate> pairs;
  pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.push_back({distance(points[i], points[j]), Edge(i, j)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Candidate& a, const Candidate& b) {
    return a.len != b.len ? a.len < b.len : a.edge < b.edge;
  });

  EllipseGraph graph;
  graph.points.assign(points.begin(), points.end());
  for (const Candidate& cand : pairs) {
    const Point& a = points[cand.edge.u];
    const Point& b = points[cand.edge.v];
    const double reach = 2.0 * cand.len * (1.0 + kEllipseSlack);
    const auto inside = [&](const Point& s) {
      return distance(a, s) + distance(s, b) <= reach;
    };
    const bool blocked =
        std::any_of(graph.edges.begin(), graph.edges.end(), [&](const Edge& e) {
          return inside(points[e.u]) && inside(points[e.v]);
        });
    if (!blocked) graph.edges.push_back(cand.edge);
  }

  auto coloring = proper_color_exact(n, graph.edges, 3);
  if (!coloring) {
    throw Error(ErrorCode::ColoringSearchFailed,
                "ellipse graph admits no 3-coloring");
  }
  return {std::move(*coloring), std::move(graph)};
}

Coloring color_delaunay_4(std::span<const Point> points) {
  const Triangulation tri = delaunay(points);
  auto coloring = proper_color_exact(points.size(), tri.edges, 4);
  if (!coloring) {
    throw Error(ErrorCode::ColoringSearchFailed,
                "Delaunay triangulation admits no 4-coloring");
  }
  return std::move(*coloring);
}

Coloring color_cones_k(std::span<const Point> points, int k) {
  return color_cones_k_traced(points, k).coloring;
}

ConesTrace color_cones_k_traced(std::span<const Point> points, int k) {
  if (k < 2) throw Error(ErrorCode::BadK, "k must be at least 2");
  require_distinct(points);
  const std::size_t n = points.size();
  const auto cones = static_cast<std::size_t>(k - 1);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Point& p = points[i];
    const Point& q = points[j];
    if (p.y != q.y) return p.y < q.y;
    if (p.x != q.x) return p.x < q.x;
    return i < j;
  });

  ConesTrace trace{Coloring{k, std::vector<Color>(n, 0)}, order,
                   std::vector<std::vector<std::size_t>>(n)};
  Coloring& out = trace.coloring;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> nearest(cones);
  std::vector<double> nearest_d2(cones);
  std::vector<Color> used;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t pi = order[s];
    std::fill(nearest.begin(), nearest.end(), kNone);
    for (std::size_t t = 0; t < s; ++t) {
      const std::size_t qi = order[t];
      const auto cone = cone_index(points[pi], points[qi], static_cast<std::size_t>(k));
      if (!cone) continue;
      const double d2 = squared_distance(points[pi], points[qi]);
      std::size_t& best = nearest[*cone];
      if (best == kNone || d2 < nearest_d2[*cone] ||
          (d2 == nearest_d2[*cone] && qi < best)) {
        best = qi;
        nearest_d2[*cone] = d2;
      }
    }
    used.clear();
    for (std::size_t r : nearest) {
      if (r == kNone) continue;
      used.push_back(out.colors[r]);
      trace.selected[pi].push_back(r);
    }
    out.colors[pi] = mex_color(used);
  }
  return trace;
}

}  // namespace chromospan
