#include "chromospan/analysis.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace chromospan {

namespace {

class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::span<const Point> pts)
      : n_(pts.size()), d_(n_ * n_, 0.0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        d_[i * n_ + j] = d_[j * n_ + i] = distance(pts[i], pts[j]);
      }
    }
  }

  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  const double* row(std::size_t i) const { return d_.data() + i * n_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

void require_cover(std::span<const Point> points, const Coloring& coloring) {
  if (coloring.size() != points.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "coloring does not cover every point");
  }
}

// Stretch of K_c(P) for the colors in `colors`. Returns as soon as the
// running maximum reaches `cutoff` (the value returned is then >= cutoff).
StretchReport coloring_stretch(const DistanceMatrix& dist,
                               std::span<const Color> colors,
                               double cutoff = std::numeric_limits<double>::infinity()) {
  const std::size_t n = colors.size();
  StretchReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const double* from_i = dist.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (colors[i] != colors[j]) continue;
      const double* from_j = dist.row(j);
      const double direct = dist(i, j);
      // Any path no longer than this cannot raise the maximum.
      const double enough = report.stretch * direct;
      double best = std::numeric_limits<double>::infinity();
      std::size_t witness = n;
      for (std::size_t r = 0; r < n; ++r) {
        if (colors[r] == colors[i]) continue;
        const double via = from_i[r] + from_j[r];
        if (via < best) {
          best = via;
          witness = r;
          if (best <= enough) break;
        }
      }
      if (witness == n) return StretchReport::infinite(Edge(i, j));
      const double ratio = best / direct;
      if (ratio > report.stretch) {
        report.stretch = ratio;
        report.worst_pair = Edge(i, j);
        report.witness = witness;
        if (ratio >= cutoff) return report;
      }
    }
  }
  return report;
}

struct WeightedArc {
  std::size_t to;
  double weight;
};
using WeightedGraph = std::vector<std::vector<WeightedArc>>;

WeightedGraph weighted_graph(std::span<const Point> points, const EdgeSet& edges) {
  WeightedGraph g(points.size());
  for (const Edge& e : edges) {
    if (e.u >= points.size() || e.v >= points.size()) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    const double w = distance(points[e.u], points[e.v]);
    g[e.u].push_back({e.v, w});
    g[e.v].push_back({e.u, w});
  }
  return g;
}

// Dijkstra that stops once every unsettled vertex is farther than `limit`.
// `dist` must be all +inf on entry; touched entries are listed in `touched`
// so the caller can reset them.
void dijkstra(const WeightedGraph& g, std::size_t source, double limit,
              std::vector<double>& dist, std::vector<std::size_t>& touched) {
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  touched.push_back(source);
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    if (d > limit) break;
    for (const WeightedArc& arc : g[v]) {
      const double nd = d + arc.weight;
      if (nd < dist[arc.to]) {
        if (dist[arc.to] == std::numeric_limits<double>::infinity()) {
          touched.push_back(arc.to);
        }
        dist[arc.to] = nd;
        heap.emplace(nd, arc.to);
      }
    }
  }
}

}  // namespace

StretchReport stretch_factor(std::span<const Point> points,
                             const Coloring& coloring) {
  require_cover(points, coloring);
  const DistanceMatrix dist(points);
  return coloring_stretch(dist, coloring.colors);
}

StretchReport dijkstra_stretch(std::span<const Point> points,
                               const EdgeSet& edges) {
  const std::size_t n = points.size();
  const WeightedGraph g = weighted_graph(points, edges);
  StretchReport report;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> touched;
  for (std::size_t s = 0; s < n; ++s) {
    dijkstra(g, s, std::numeric_limits<double>::infinity(), dist, touched);
    for (std::size_t t = s + 1; t < n; ++t) {
      if (dist[t] == std::numeric_limits<double>::infinity()) {
        return StretchReport::infinite(Edge(s, t));
      }
      const double ratio = dist[t] / distance(points[s], points[t]);
      if (ratio > report.stretch) {
        report.stretch = ratio;
        report.worst_pair = Edge(s, t);
      }
    }
    for (std::size_t v : touched) dist[v] = std::numeric_limits<double>::infinity();
    touched.clear();
  }
  return report;
}

EdgeSet bichromatic_edges(const Coloring& coloring) {
  EdgeSet edges;
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    for (std::size_t j = i + 1; j < coloring.size(); ++j) {
      if (coloring[i] != coloring[j]) edges.emplace_back(i, j);
    }
  }
  return edges;
}

bool has_ellipse_property(std::span<const Point> points,
                          const Coloring& coloring, double t) {
  require_cover(points, coloring);
  const std::size_t n = points.size();
  const DistanceMatrix dist(points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coloring[i] != coloring[j]) continue;
      const double reach = (t + kGeoEps) * dist(i, j);
      bool found = false;
      for (std::size_t r = 0; r < n && !found; ++r) {
        found = coloring[r] != coloring[i] && dist(i, r) + dist(r, j) <= reach;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_plane_graph(std::span<const Point> points, const EdgeSet& edges) {
  for (const Edge& e : edges) {
    if (e.u >= points.size() || e.v >= points.size()) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    for (std::size_t w = 0; w < points.size(); ++w) {
      if (w == e.u || w == e.v) continue;
      if (on_segment(points[e.u], points[e.v], points[w])) return false;
    }
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      if (segments_properly_cross(points[e.u], points[e.v], points[f.u],
                                  points[f.v])) {
        return false;
      }
    }
  }
  return true;
}

bool is_triangle_free(const EdgeSet& edges) {
  std::size_t n = 0;
  for (const Edge& e : edges) n = std::max(n, e.v + 1);
  std::vector<std::set<std::size_t>> adj(n);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  for (const Edge& e : edges) {
    const auto& small = adj[e.u].size() < adj[e.v].size() ? adj[e.u] : adj[e.v];
    const auto& large = adj[e.u].size() < adj[e.v].size() ? adj[e.v] : adj[e.u];
    for (std::size_t w : small) {
      if (w != e.u && w != e.v && large.count(w) != 0) return false;
    }
  }
  return true;
}

OptimalColoring optimal_coloring_bruteforce(std::span<const Point> points,
                                            int k, std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::BadK, "k must be positive");
  const std::size_t n = points.size();
  require_distinct(points);

  std::uint64_t count = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (count > budget / static_cast<std::uint64_t>(k)) {
      throw Error(ErrorCode::BudgetExceeded, "k^(n-1) colorings exceed budget");
    }
    count *= static_cast<std::uint64_t>(k);
  }
  if (count > budget) {
    throw Error(ErrorCode::BudgetExceeded, "k^(n-1) colorings exceed budget");
  }

  OptimalColoring best{Coloring{k, std::vector<Color>(n, 1)},
                       std::numeric_limits<double>::infinity()};
  if (n == 0) {
    best.stretch = 1.0;
    return best;
  }
  const DistanceMatrix dist(points);
  std::vector<Color> colors(n, 1);
  bool first = true;
  while (true) {
    const StretchReport r = coloring_stretch(dist, colors, best.stretch);
    if (first || r.stretch < best.stretch) {
      best.stretch = r.stretch;
      best.coloring.colors = colors;
      first = false;
    }
    // Odometer over positions 1..n-1, last position fastest.
    std::size_t pos = n - 1;
    while (pos >= 1 && colors[pos] == k) {
      colors[pos] = 1;
      --pos;
    }
    if (pos == 0) break;
    ++colors[pos];
  }
  return best;
}

SparseSpanner sparsify_greedy(std::span<const Point> points,
                              const Coloring& coloring, double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  }
  require_cover(points, coloring);
  const std::size_t n = points.size();

  struct Candidate {
    double len;
    Edge edge;
  };
  std::vector<Candidate> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coloring[i] != coloring[j]) {
        pairs.push_back({distance(points[i], points[j]), Edge(i, j)});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Candidate& a, const Candidate& b) {
    return a.len != b.len ? a.len < b.len : a.edge < b.edge;
  });

  SparseSpanner out{PointSet(points.begin(), points.end()), coloring, {}, epsilon};
  WeightedGraph g(n);
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> touched;
  for (const Candidate& cand : pairs) {
    const double limit = (1.0 + epsilon) * cand.len;
    dijkstra(g, cand.edge.u, limit, dist, touched);
    const bool served = dist[cand.edge.v] <= limit;
    for (std::size_t v : touched) dist[v] = std::numeric_limits<double>::infinity();
    touched.clear();
    if (served) continue;
    out.edges.push_back(cand.edge);
    g[cand.edge.u].push_back({cand.edge.v, cand.len});
    g[cand.edge.v].push_back({cand.edge.u, cand.len});
  }
  return out;
}

}  // namespace chromospan
