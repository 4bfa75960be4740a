#include <doctest.h>

#include <random>

#include "chromospan/coloring.hpp"

using namespace chromospan;

namespace {

EdgeSet cycle(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return e;
}

}  // namespace

TEST_CASE("mex_color") {
  CHECK(mex_color({}) == 1);
  CHECK(mex_color({1, 2}) == 3);
  CHECK(mex_color({2, 3}) == 1);
  CHECK(mex_color({1, 3, 1}) == 2);
}

TEST_CASE("proper_color_exact on small graphs") {
  const EdgeSet triangle = cycle(3);
  const auto three = proper_color_exact(3, triangle, 3);
  REQUIRE(three.has_value());
  CHECK(is_proper(*three, triangle));
  CHECK(three->colors_used() == 3);

  CHECK_FALSE(proper_color_exact(3, triangle, 2).has_value());

  const EdgeSet c5 = cycle(5);
  const auto c5_col = proper_color_exact(5, c5, 3);
  REQUIRE(c5_col.has_value());
  CHECK(is_proper(*c5_col, c5));
  CHECK_FALSE(proper_color_exact(5, c5, 2).has_value());

  // Even cycles are bipartite.
  CHECK(proper_color_exact(6, cycle(6), 2).has_value());
  // Isolated vertices and empty graphs.
  const auto empty = proper_color_exact(4, {}, 1);
  REQUIRE(empty.has_value());
  CHECK(empty->colors == std::vector<Color>{1, 1, 1, 1});
  CHECK(proper_color_exact(0, {}, 3).has_value());
}

TEST_CASE("proper_color_exact proves non-colorability") {
  // K4 needs four colors.
  EdgeSet k4;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
  CHECK_FALSE(proper_color_exact(4, k4, 3).has_value());
  CHECK(proper_color_exact(4, k4, 4).has_value());

  // Petersen graph: chromatic number 3.
  EdgeSet petersen;
  for (std::size_t i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  CHECK_FALSE(proper_color_exact(10, petersen, 2).has_value());
  const auto p3 = proper_color_exact(10, petersen, 3);
  REQUIRE(p3.has_value());
  CHECK(is_proper(*p3, petersen));
}

TEST_CASE("proper_color_exact agrees with exhaustive search on random graphs") {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 7;
    EdgeSet edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    for (int k = 1; k <= 4; ++k) {
      // Enumerate all k^n assignments.
      bool exists = false;
      std::vector<Color> c(n, 1);
      while (!exists) {
        exists = is_proper(Coloring{k, c}, edges);
        std::size_t pos = 0;
        while (pos < n && c[pos] == k) c[pos++] = 1;
        if (pos == n) break;
        ++c[pos];
      }
      const auto found = proper_color_exact(n, edges, k);
      CHECK(found.has_value() == exists);
      if (found) {
        CHECK(is_proper(*found, edges));
        CHECK_NOTHROW(found->validate());
      }
    }
  }
}

TEST_CASE("Coloring::validate") {
  CHECK_NOTHROW((Coloring{2, {1, 2, 1}}.validate()));
  CHECK_THROWS_AS((Coloring{2, {1, 3}}.validate()), Error);
  CHECK_THROWS_AS((Coloring{2, {0}}.validate()), Error);
}
