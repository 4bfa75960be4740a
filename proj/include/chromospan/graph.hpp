#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace chromospan {

/// Undirected edge over point indices, stored with first < second.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;
using Triangle = std::array<std::size_t, 3>;

using AdjacencyList = std::vector<std::vector<std::size_t>>;

inline AdjacencyList adjacency(std::size_t n, const EdgeSet& edges) {
  AdjacencyList adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

}  // namespace chromospan
