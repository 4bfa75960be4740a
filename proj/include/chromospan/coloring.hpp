#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chromospan/error.hpp"
#include "chromospan/graph.hpp"

namespace chromospan {

using Color = int;

/// Assignment of a color in {1..k} to every point index.
struct Coloring {
  int k = 0;
  std::vector<Color> colors;

  std::size_t size() const { return colors.size(); }
  Color operator[](std::size_t i) const { return colors[i]; }

  /// Number of distinct colors actually used.
  std::size_t colors_used() const;

  /// Throws InvalidArgument unless every color lies in {1..k}.
  void validate() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Smallest positive color not in `used`.
Color mex_color(const std::vector<Color>& used);

/// Proper k-coloring of the graph on n vertices by DSATUR-ordered
/// backtracking, or nullopt when none exists.
std::optional<Coloring> proper_color_exact(std::size_t n, const EdgeSet& edges,
                                           int k);

bool is_proper(const Coloring& coloring, const EdgeSet& edges);

}  // namespace chromospan
