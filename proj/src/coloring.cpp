#include "chromospan/coloring.hpp"

#include <algorithm>
#include <set>

#include "chromospan/error.hpp"

namespace chromospan {

std::size_t Coloring::colors_used() const {
  return std::set<Color>(colors.begin(), colors.end()).size();
}

void Coloring::validate() const {
  for (Color c : colors) {
    if (c < 1 || c > k) {
      throw Error(ErrorCode::InvalidArgument, "color outside {1..k}");
    }
  }
}

Color mex_color(const std::vector<Color>& used) {
  Color c = 1;
  while (std::find(used.begin(), used.end(), c) != used.end()) ++c;
  return c;
}

bool is_proper(const Coloring& coloring, const EdgeSet& edges) {
  return std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return coloring[e.u] == coloring[e.v];
  });
}

namespace {

class DsaturSearch {
 public:
  DsaturSearch(std::size_t n, const EdgeSet& edges, int k)
      : k_(k),
        adj_(adjacency(n, edges)),
        color_(n, 0),
        // neighbor_count_[v][c]: colored neighbors of v with color c.
        neighbor_count_(n, std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
        saturation_(n, 0) {
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  bool run() { return extend(0, 0); }

  std::vector<Color> colors() const { return color_; }

 private:
  std::size_t pick() const {
    std::size_t best = color_.size();
    for (std::size_t v = 0; v < color_.size(); ++v) {
      if (color_[v] != 0) continue;
      if (best == color_.size() || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           adj_[v].size() > adj_[best].size())) {
        best = v;
      }
    }
    return best;
  }

  void assign(std::size_t v, Color c) {
    color_[v] = c;
    for (std::size_t w : adj_[v]) {
      if (neighbor_count_[w][c]++ == 0) ++saturation_[w];
    }
  }

  void unassign(std::size_t v) {
    const Color c = color_[v];
    color_[v] = 0;
    for (std::size_t w : adj_[v]) {
      if (--neighbor_count_[w][c] == 0) --saturation_[w];
    }
  }

  bool extend(std::size_t colored, int max_used) {
    if (colored == color_.size()) return true;
    const std::size_t v = pick();
    if (saturation_[v] >= k_) return false;
    // Opening more than one fresh color at a time only permutes labels.
    const int limit = std::min(k_, max_used + 1);
    for (Color c = 1; c <= limit; ++c) {
      if (neighbor_count_[v][c] != 0) continue;
      assign(v, c);
      if (extend(colored + 1, std::max(max_used, c))) return true;
      unassign(v);
    }
    return false;
  }

  int k_;
  AdjacencyList adj_;
  std::vector<Color> color_;
  std::vector<std::vector<int>> neighbor_count_;
  std::vector<int> saturation_;
};

}  // namespace

std::optional<Coloring> proper_color_exact(std::size_t n, const EdgeSet& edges,
                                           int k) {
  if (k < 1) return std::nullopt;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) return std::nullopt;
  }
  DsaturSearch search(n, edges, k);
  if (!search.run()) return std::nullopt;
  return Coloring{k, search.colors()};
}

}  // namespace chromospan
