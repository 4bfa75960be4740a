#include "chromospan/online.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "chromospan/analysis.hpp"

namespace chromospan {

double online_bound(int k) {
  if (k < 2) throw Error(ErrorCode::BadK, "k must be at least 2");
  return 1.0 + 2.0 * std::sin(std::numbers::pi / k);
}

OnlineColorer::OnlineColorer(int k) : k_(k) {
  if (k < 2) throw Error(ErrorCode::BadK, "online coloring needs k >= 2");
}

Color OnlineColorer::insert(const Point& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw Error(ErrorCode::InvalidArgument, "point coordinate is not finite");
  }
  for (const Point& q : history_) {
    if (q == p) throw Error(ErrorCode::DuplicatePoints, "point already inserted");
  }

  const double prune_angle = 2.0 * std::numbers::pi / k_ + kGeoEps;
  std::vector<std::size_t> remaining(history_.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  last_neighbors_.clear();
  std::vector<Color> used;
  while (!remaining.empty()) {
    // Nearest remaining point; ties go to the earliest arrival.
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
      const double d2 = squared_distance(p, history_[remaining[slot]]);
      if (d2 < best_d2) {
        best_d2 = d2;
        best = slot;
      }
    }
    const std::size_t neighbor = remaining[best];
    last_neighbors_.push_back(neighbor);
    used.push_back(colors_[neighbor]);
    if (last_neighbors_.size() > static_cast<std::size_t>(k_ - 1)) {
      throw std::logic_error("online insertion selected more than k-1 neighbors");
    }

    std::vector<std::size_t> kept;
    kept.reserve(remaining.size());
    for (std::size_t q : remaining) {
      if (q == neighbor) continue;
      if (angle_at(p, history_[q], history_[neighbor]) > prune_angle) {
        kept.push_back(q);
      }
    }
    remaining = std::move(kept);
  }

  const Color c = mex_color(used);
  history_.push_back(p);
  colors_.push_back(c);
  return c;
}

StretchReport OnlineColorer::finalize_stretch() const {
  return stretch_factor(history_, coloring());
}

}  // namespace chromospan
