#include "chromospan/proximity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace chromospan {

namespace {

std::uint64_t directed_key(std::size_t from, std::size_t to) {
  return (static_cast<std::uint64_t>(from) << 32) | static_cast<std::uint64_t>(to);
}

// Triangle soup with a directed-edge index; every triangle is stored CCW.
class Mesh {
 public:
  explicit Mesh(std::span<const Point> pts) : pts_(pts) {}

  void add(std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t id = tris_.size();
    tris_.push_back({a, b, c});
    index(id);
  }

  // Lawson flips until every interior edge is locally Delaunay under the
  // perturbed in-circle test.
  void legalize() {
    std::vector<std::uint64_t> stack;
    stack.reserve(edge_to_tri_.size());
    for (const auto& [key, tri] : edge_to_tri_) stack.push_back(key);
    std::sort(stack.begin(), stack.end());

    while (!stack.empty()) {
      const std::uint64_t key = stack.back();
      stack.pop_back();
      const std::size_t a = key >> 32;
      const std::size_t b = key & 0xffffffffu;
      const auto left = edge_to_tri_.find(directed_key(a, b));
      const auto right = edge_to_tri_.find(directed_key(b, a));
      if (left == edge_to_tri_.end() || right == edge_to_tri_.end()) continue;

      const std::size_t t1 = left->second;
      const std::size_t t2 = right->second;
      const std::size_t c = opposite(t1, a, b);
      const std::size_t d = opposite(t2, b, a);
      if (in_circle_perturbed(pts_, a, b, c, d) != CirclePosition::Inside) {
        continue;
      }

      unindex(t1);
      unindex(t2);
      // (a,b,c) and (b,a,d) become (c,a,d) and (d,b,c).
      tris_[t1] = {c, a, d};
      tris_[t2] = {d, b, c};
      index(t1);
      index(t2);
      for (auto [u, v] : {std::pair{a, d}, std::pair{d, b}, std::pair{b, c},
                          std::pair{c, a}}) {
        stack.push_back(directed_key(u, v));
      }
    }
  }

  const std::vector<Triangle>& triangles() const { return tris_; }

 private:
  std::size_t opposite(std::size_t tri, std::size_t a, std::size_t b) const {
    for (std::size_t v : tris_[tri]) {
      if (v != a && v != b) return v;
    }
    return tris_[tri][0];
  }

  void index(std::size_t id) {
    const Triangle& t = tris_[id];
    for (int i = 0; i < 3; ++i) {
      edge_to_tri_[directed_key(t[i], t[(i + 1) % 3])] = id;
    }
  }

  void unindex(std::size_t id) {
    const Triangle& t = tris_[id];
    for (int i = 0; i < 3; ++i) {
      edge_to_tri_.erase(directed_key(t[i], t[(i + 1) % 3]));
    }
  }

  std::span<const Point> pts_;
  std::vector<Triangle> tris_;
  std::unordered_map<std::uint64_t, std::size_t> edge_to_tri_;
};

}  // namespace

Triangulation delaunay(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw Error(ErrorCode::TooFewPoints, "delaunay needs at least 3 points");
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "too many points");
  }
  require_distinct(points);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Point& p = points[i];
    const Point& q = points[j];
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });

  // Leading run of points collinear with the first two in sweep order.
  std::size_t first_off = 2;
  while (first_off < n &&
         orientation(points[order[0]], points[order[1]],
                     points[order[first_off]]) == Orientation::Collinear) {
    ++first_off;
  }
  if (first_off == n) {
    throw Error(ErrorCode::AllCollinear, "all input points are collinear");
  }

  Mesh mesh(points);
  // Hull as a CCW cycle of point indices; collinear hull vertices are kept.
  std::vector<std::size_t> hull;
  const std::size_t apex = order[first_off];
  const bool apex_left =
      orientation(points[order[0]], points[order[1]], points[apex]) ==
      Orientation::CCW;
  for (std::size_t i = 0; i + 1 < first_off; ++i) {
    const std::size_t u = order[i];
    const std::size_t v = order[i + 1];
    if (apex_left) {
      mesh.add(u, v, apex);
    } else {
      mesh.add(v, u, apex);
    }
  }
  if (apex_left) {
    for (std::size_t i = 0; i < first_off; ++i) hull.push_back(order[i]);
    hull.push_back(apex);
  } else {
    hull.push_back(apex);
    for (std::size_t i = first_off; i-- > 0;) hull.push_back(order[i]);
  }

  for (std::size_t s = first_off + 1; s < n; ++s) {
    const std::size_t p = order[s];
    const std::size_t h = hull.size();
    std::vector<bool> visible(h);
    for (std::size_t i = 0; i < h; ++i) {
      visible[i] = orientation(points[hull[i]], points[hull[(i + 1) % h]],
                               points[p]) == Orientation::CW;
    }
    // The point is lexicographically last, so it sees a contiguous, non-empty
    // chain of hull edges. Find its first edge.
    std::size_t start = 0;
    while (!(visible[start] && !visible[(start + h - 1) % h])) ++start;
    std::size_t count = 0;
    while (visible[(start + count) % h]) {
      const std::size_t u = hull[(start + count) % h];
      const std::size_t v = hull[(start + count + 1) % h];
      mesh.add(u, p, v);
      ++count;
    }
    // Replace the interior vertices of the visible chain with p.
    std::vector<std::size_t> next;
    next.reserve(h + 1);
    const std::size_t chain_end = (start + count) % h;
    for (std::size_t i = 0; i <= h - count; ++i) {
      next.push_back(hull[(chain_end + i) % h]);
    }
    // next runs from chain end around to chain start; close with p.
    next.push_back(p);
    hull = std::move(next);
  }

  mesh.legalize();

  Triangulation out;
  out.points.assign(points.begin(), points.end());
  for (Triangle t : mesh.triangles()) {
    std::sort(t.begin(), t.end());
    out.triangles.push_back(t);
    out.edges.emplace_back(t[0], t[1]);
    out.edges.emplace_back(t[1], t[2]);
    out.edges.emplace_back(t[0], t[2]);
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

SpanningTree emst(std::span<const Point> points) {
  require_distinct(points);
  const std::size_t n = points.size();
  SpanningTree tree;
  tree.points.assign(points.begin(), points.end());
  if (n < 2) return tree;

  // Key of each outside vertex: (squared length, connecting edge).
  struct Key {
    double len2 = std::numeric_limits<double>::infinity();
    Edge edge;
    bool operator<(const Key& o) const {
      return len2 != o.len2 ? len2 < o.len2 : edge < o.edge;
    }
  };
  std::vector<Key> key(n);
  std::vector<bool> in_tree(n, false);
  std::size_t current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const Key cand{squared_distance(points[current], points[v]),
                     Edge(current, v)};
      if (cand < key[v]) key[v] = cand;
      if (best == n || key[v] < key[best]) best = v;
    }
    in_tree[best] = true;
    tree.edges.push_back(key[best].edge);
    current = best;
  }
  return tree;
}

}  // namespace chromospan
