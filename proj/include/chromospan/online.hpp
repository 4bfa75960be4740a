#pragma once

#include <cstddef>
#include <vector>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"

namespace chromospan {

struct StretchReport;

/// 1 + 2 sin(pi / k).
double online_bound(int k);

/// Online k-coloring: each arriving point is colored immediately and the
/// color never changes. An arrival repeatedly takes its nearest remaining
/// earlier point as a neighbor and discards every remaining point within
/// angle 2*pi/k of that neighbor; it then takes the smallest color unused by
/// its neighbors.
class OnlineColorer {
 public:
  /// Throws BadK when k < 2.
  explicit OnlineColorer(int k);

  /// Throws DuplicatePoints if p was inserted before.
  Color insert(const Point& p);

  int k() const { return k_; }
  std::size_t size() const { return history_.size(); }
  const PointSet& history() const { return history_; }
  Coloring coloring() const { return {k_, colors_}; }

  /// Neighbors selected by the most recent insertion, in selection order.
  const std::vector<std::size_t>& last_neighbors() const { return last_neighbors_; }

  StretchReport finalize_stretch() const;

 private:
  int k_;
  PointSet history_;
  std::vector<Color> colors_;
  std::vector<std::size_t> last_neighbors_;
};

}  // namespace chromospan
