#include "chromospan/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "chromospan/analysis.hpp"
#include "chromospan/offline.hpp"
#include "chromospan/online.hpp"

namespace chromospan {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::OfflineK: return "offline_k";
    case Mode::OnlineK: return "online_k";
    case Mode::OfflineSpecialized: return "offline_specialized";
  }
  return "unknown";
}

Mode parse_mode(const std::string& name) {
  for (Mode m : {Mode::OfflineK, Mode::OnlineK, Mode::OfflineSpecialized}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (ks.empty() || modes.empty()) {
    throw Error(ErrorCode::InvalidArgument, "need at least one k and one mode");
  }
  for (int k : ks) {
    if (k < 2) throw Error(ErrorCode::BadK, "every k must be >= 2");
  }
}

const ResultRow& ResultTable::at(int k, Mode mode) const {
  for (const ResultRow& row : rows) {
    if (row.k == k && row.mode == mode) return row;
  }
  throw Error(ErrorCode::InvalidArgument, "no row for requested k and mode");
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("CHROMOSPAN_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

PointSet draw_points(std::mt19937_64& rng, int n, std::uint64_t& redraws) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointSet pts;
  pts.reserve(static_cast<std::size_t>(n));
  std::set<std::pair<double, double>> seen;
  while (pts.size() < static_cast<std::size_t>(n)) {
    const double x = unit(rng);
    const double y = unit(rng);
    if (!seen.emplace(x, y).second) {
      ++redraws;
      continue;
    }
    pts.push_back({x, y});
  }
  return pts;
}

double coloring_stretch_for(Mode mode, int k, const PointSet& pts,
                            const PointSet& arrivals) {
  switch (mode) {
    case Mode::OfflineK:
      return stretch_factor(pts, color_cones_k(pts, k)).stretch;
    case Mode::OnlineK: {
      OnlineColorer colorer(k);
      for (const Point& p : arrivals) colorer.insert(p);
      return colorer.finalize_stretch().stretch;
    }
    case Mode::OfflineSpecialized: {
      Coloring c;
      if (k == 2) {
        c = color_mst_2(pts);
      } else if (k == 3) {
        c = color_ellipse_3(pts).coloring;
      } else if (k == 4 && pts.size() >= 3) {
        c = color_delaunay_4(pts);
      } else {
        c = color_cones_k(pts, k);
      }
      return stretch_factor(pts, c).stretch;
    }
  }
  return 0.0;
}

}  // namespace

PointSet trial_points(std::uint64_t seed, int trial, int n, std::uint64_t& redraws) {
  std::mt19937_64 rng = trial_rng(seed, trial);
  return draw_points(rng, n, redraws);
}

ResultTable run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t cells = config.ks.size() * config.modes.size();
  const auto trials = static_cast<std::size_t>(config.trials);
  // samples[trial * cells + cell]
  std::vector<double> samples(trials * cells, 0.0);
  std::vector<std::uint64_t> redraws(trials, 0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      try {
        std::mt19937_64 rng = trial_rng(config.seed, static_cast<int>(t));
        const PointSet pts = draw_points(rng, config.n, redraws[t]);
        PointSet arrivals = pts;
        std::shuffle(arrivals.begin(), arrivals.end(), rng);
        std::size_t cell = 0;
        for (int k : config.ks) {
          for (Mode mode : config.modes) {
            samples[t * cells + cell++] = coloring_stretch_for(mode, k, pts, arrivals);
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(
      config.threads != 0 ? config.threads : default_thread_count(), trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ResultTable table;
  table.redraws = std::accumulate(redraws.begin(), redraws.end(), std::uint64_t{0});
  std::size_t cell = 0;
  for (int k : config.ks) {
    for (Mode mode : config.modes) {
      ResultRow row{k, mode, 0.0, 0.0, std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity(), config.trials};
      double sum = 0.0;
      for (std::size_t t = 0; t < trials; ++t) {
        const double v = samples[t * cells + cell];
        sum += v;
        row.min = std::min(row.min, v);
        row.max = std::max(row.max, v);
      }
      row.mean = sum / static_cast<double>(trials);
      if (trials > 1) {
        double sq = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
          const double d = samples[t * cells + cell] - row.mean;
          sq += d * d;
        }
        row.std_dev = std::sqrt(sq / static_cast<double>(trials - 1));
      }
      table.rows.push_back(row);
      ++cell;
    }
  }
  return table;
}

void format_table_csv(std::ostream& out, const ResultTable& table) {
  out << "k,mode,mean,std,min,max,trials\n";
  char buf[256];
  for (const ResultRow& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%d,%s,%.6f,%.6f,%.6f,%.6f,%d\n", r.k,
                  to_string(r.mode), r.mean, r.std_dev, r.min, r.max, r.trials);
    out << buf;
  }
}

void format_table_json(std::ostream& out, const ExperimentConfig& config,
                       const ResultTable& table) {
  nlohmann::json doc;
  doc["config"] = {{"trials", config.trials},
                   {"n", config.n},
                   {"ks", config.ks},
                   {"seed", config.seed},
                   {"distribution", "uniform_unit_square"}};
  std::vector<std::string> modes;
  for (Mode m : config.modes) modes.emplace_back(to_string(m));
  doc["config"]["modes"] = modes;
  doc["redraws"] = table.redraws;
  nlohmann::json rows = nlohmann::json::array();
  for (const ResultRow& r : table.rows) {
    rows.push_back({{"k", r.k},
                    {"mode", to_string(r.mode)},
                    {"mean", r.mean},
                    {"std", r.std_dev},
                    {"min", r.min},
                    {"max", r.max},
                    {"trials", r.trials}});
  }
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
}

}  // namespace chromospan
