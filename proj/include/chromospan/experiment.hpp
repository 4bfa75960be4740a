#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chromospan/geometry.hpp"

namespace chromospan {

enum class Mode { OfflineK, OnlineK, OfflineSpecialized };

const char* to_string(Mode mode);
/// Accepts "offline_k", "online_k", "offline_specialized".
Mode parse_mode(const std::string& name);

struct ExperimentConfig {
  int trials = 200;
  int n = 50;
  std::vector<int> ks{2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<Mode> modes{Mode::OfflineK, Mode::OnlineK};
  std::uint64_t seed = 1;
  /// 0 means: CHROMOSPAN_THREADS if set, else hardware concurrency.
  unsigned threads = 0;

  /// Throws InvalidArgument / BadK on trials < 1, n < 2, k < 2 or no modes.
  void validate() const;
};

struct ResultRow {
  int k = 0;
  Mode mode = Mode::OfflineK;
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation
  double min = 0.0;
  double max = 0.0;
  int trials = 0;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // ordered by k, then by config mode order
  /// Random points that collided with an earlier point and were redrawn.
  std::uint64_t redraws = 0;

  const ResultRow& at(int k, Mode mode) const;
};

/// Uniform points in the unit square for trial `trial`. Deterministic in
/// (seed, trial); duplicates are redrawn and counted in `redraws`.
PointSet trial_points(std::uint64_t seed, int trial, int n, std::uint64_t& redraws);

/// Runs every trial. Trial i draws its point set and its online arrival order
/// from an RNG seeded by (seed, i), so results do not depend on threading.
/// offline_k uses the cone algorithm for every k; offline_specialized uses
/// the MST, ellipse and Delaunay algorithms for k = 2, 3, 4.
ResultTable run_experiment(const ExperimentConfig& config);

/// CSV with header "k,mode,mean,std,min,max,trials".
void format_table_csv(std::ostream& out, const ResultTable& table);
void format_table_json(std::ostream& out, const ExperimentConfig& config,
                       const ResultTable& table);

/// Thread count from CHROMOSPAN_THREADS, falling back to the hardware.
unsigned default_thread_count();

}  // namespace chromospan
