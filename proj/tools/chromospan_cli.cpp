// chromospan: color planar point sets so the induced complete k-partite
// graph is a spanner, check the result, and rerun the simulation tables.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromospan/analysis.hpp"
#include "chromospan/constructions.hpp"
#include "chromospan/experiment.hpp"
#include "chromospan/offline.hpp"
#include "chromospan/online.hpp"
#include "chromospan/point_io.hpp"

namespace cs = chromospan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundViolation = 2;

// Writes to `path`, or to stdout when the path is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw cs::Error(cs::ErrorCode::IoError, "cannot write " + path);
  write(out);
}

std::string format_stretch(const cs::StretchReport& r) {
  if (r.unbounded) return "inf";
  std::ostringstream s;
  s.precision(9);
  s << std::fixed << r.stretch;
  return s.str();
}

struct ColorOptions {
  std::string algo;
  int k = 0;
  std::string in;
  std::string out;
  bool verify = false;
  std::optional<double> sparsify;
  std::string edges_out;
};

int run_color(const ColorOptions& opt) {
  const cs::PointSet points = cs::read_points(opt.in);

  int k = opt.k;
  double bound = 0.0;
  cs::Coloring coloring;
  std::optional<cs::EllipseGraph> ellipse_graph;
  if (opt.algo == "mst2" || opt.algo == "ellipse3" || opt.algo == "delaunay4") {
    const int fixed = opt.algo == "mst2" ? 2 : opt.algo == "ellipse3" ? 3 : 4;
    if (k != 0 && k != fixed) {
      std::cerr << "error: --algo " << opt.algo << " always uses k=" << fixed << "\n";
      return kExitUsage;
    }
    k = fixed;
  } else if (k < 2) {
    std::cerr << "error: --algo " << opt.algo << " needs --k >= 2\n";
    return kExitUsage;
  }

  if (opt.algo == "mst2") {
    coloring = cs::color_mst_2(points);
    bound = cs::mst2_bound();
  } else if (opt.algo == "ellipse3") {
    auto result = cs::color_ellipse_3(points);
    coloring = std::move(result.coloring);
    ellipse_graph = std::move(result.graph);
    bound = cs::ellipse3_bound();
  } else if (opt.algo == "delaunay4") {
    coloring = cs::color_delaunay_4(points);
    bound = cs::delaunay4_bound();
  } else if (opt.algo == "cones") {
    coloring = cs::color_cones_k(points, k);
    bound = cs::cones_bound(k);
  } else {
    cs::OnlineColorer colorer(k);
    for (const cs::Point& p : points) colorer.insert(p);
    coloring = colorer.coloring();
    bound = cs::online_bound(k);
  }

  emit(opt.out, [&](std::ostream& os) { cs::format_coloring(os, coloring); });

  int status = kExitOk;
  if (opt.verify) {
    const cs::StretchReport report = cs::stretch_factor(points, coloring);
    const bool within = !report.unbounded && report.stretch <= bound + cs::kGeoEps;
    std::cerr << "algo=" << opt.algo << " k=" << k << " n=" << points.size()
              << " colors_used=" << coloring.colors_used()
              << " stretch=" << format_stretch(report) << " bound=" << std::fixed
              << std::setprecision(6) << bound << (within ? " PASS" : " FAIL")
              << "\n";
    if (ellipse_graph) {
      const bool tri_free = cs::is_triangle_free(ellipse_graph->edges);
      const bool plane = cs::is_plane_graph(points, ellipse_graph->edges);
      std::cerr << "ellipse_graph edges=" << ellipse_graph->edges.size()
                << " triangle_free=" << tri_free << " plane=" << plane << "\n";
      if (!tri_free || !plane) status = kExitBoundViolation;
    }
    if (!within) status = kExitBoundViolation;
  }

  if (opt.sparsify) {
    const cs::SparseSpanner sparse = cs::sparsify_greedy(points, coloring, *opt.sparsify);
    const std::string path = !opt.edges_out.empty() ? opt.edges_out
                             : !opt.out.empty()     ? opt.out + ".edges.csv"
                                                    : std::string();
    emit(path, [&](std::ostream& os) { cs::format_edges(os, points, sparse.edges); });
    std::cerr << "sparse edges=" << sparse.edges.size() << " epsilon=" << *opt.sparsify
              << "\n";
  }
  return status;
}

struct TableOptions {
  cs::ExperimentConfig config;
  std::vector<std::string> modes{"offline_k", "online_k"};
  std::string format = "csv";
  std::string out;
};

int run_table(TableOptions opt) {
  opt.config.modes.clear();
  for (const std::string& m : opt.modes) opt.config.modes.push_back(cs::parse_mode(m));
  const cs::ResultTable table = cs::run_experiment(opt.config);
  emit(opt.out, [&](std::ostream& os) {
    if (opt.format == "json") {
      cs::format_table_json(os, opt.config, table);
    } else {
      cs::format_table_csv(os, table);
    }
  });
  if (table.redraws != 0) std::cerr << "redrawn duplicate points: " << table.redraws << "\n";
  return kExitOk;
}

struct LowerBoundOptions {
  std::string family;
  int n = 5;
  int k = 5;
  std::string out;
  bool bruteforce = false;
  std::uint64_t budget = cs::kDefaultBruteForceBudget;
};

int run_lowerbound(const LowerBoundOptions& opt) {
  cs::LowerBoundInstance inst;
  if (opt.family == "k2") {
    inst = cs::gen_lb_k2(opt.n);
  } else if (opt.family == "k3") {
    inst = cs::gen_lb_k3(opt.n);
  } else if (opt.family == "k4") {
    inst = cs::gen_lb_k4(opt.n);
  } else if (opt.family == "kgon") {
    inst = cs::gen_lb_kgon(opt.k);
  } else if (opt.family == "online") {
    inst = cs::gen_online_lb(opt.k);
  } else {
    inst = cs::gen_online_probe_k3();
  }
  if (!opt.out.empty()) cs::write_points(inst.points, opt.out);

  std::cout << std::setprecision(9) << std::fixed;
  std::cout << "family=" << opt.family << " k=" << inst.k << " points=" << inst.points.size()
            << " online=" << inst.online << " bound=" << inst.analytic_bound << " ("
            << inst.bound_formula << ")\n";
  if (inst.online) {
    cs::OnlineColorer colorer(inst.k);
    const auto outcome = cs::run_adversary(
        inst, [&](const cs::Point& p) { return colorer.insert(p); });
    std::cout << "online algorithm: final_stretch=" << outcome.final_stretch
              << " peak_stretch=" << outcome.peak_stretch
              << " upper_bound=" << cs::online_bound(inst.k) << "\n";
  }
  if (opt.bruteforce && !inst.online) {
    const auto best = cs::optimal_coloring_bruteforce(inst.points, inst.k, opt.budget);
    const bool ok = best.stretch >= inst.analytic_bound - 1e-6;
    std::cout << "bruteforce optimum=" << best.stretch << (ok ? " PASS" : " FAIL") << "\n";
    if (!ok) return kExitBoundViolation;
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string in;
  std::string coloring;
  int k = 0;
  std::optional<double> t;
};

int run_verify(const VerifyOptions& opt) {
  const cs::PointSet points = cs::read_points(opt.in);
  cs::Coloring coloring = cs::read_coloring(opt.coloring, opt.k > 0 ? opt.k : 1 << 20);
  if (opt.k == 0) {
    int used = 1;
    for (cs::Color c : coloring.colors) used = std::max(used, c);
    coloring.k = used;
  }
  const cs::StretchReport report = cs::stretch_factor(points, coloring);
  std::cout << "n=" << points.size() << " k=" << coloring.k
            << " stretch=" << format_stretch(report);
  if (report.worst_pair) {
    std::cout << " worst_pair=" << report.worst_pair->u << "," << report.worst_pair->v;
  }
  if (report.witness) std::cout << " witness=" << *report.witness;
  std::cout << "\n";
  if (opt.t) {
    const bool holds = cs::has_ellipse_property(points, coloring, *opt.t);
    std::cout << "ellipse_property(t=" << *opt.t << ")=" << (holds ? "true" : "false")
              << "\n";
    return holds ? kExitOk : kExitBoundViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic geometric spanners: coloring, verification, experiments"};
  app.require_subcommand(1);

  ColorOptions color;
  auto* color_cmd = app.add_subcommand("color", "Color a point file");
  color_cmd->add_option("--algo", color.algo, "Coloring algorithm")
      ->required()
      ->check(CLI::IsMember({"mst2", "ellipse3", "delaunay4", "cones", "online"}));
  color_cmd->add_option("--k", color.k, "Number of colors (cones, online)");
  color_cmd->add_option("--in", color.in, "Input point file")->required();
  color_cmd->add_option("--out", color.out, "Output coloring CSV (default stdout)");
  color_cmd->add_flag("--verify", color.verify, "Check the stretch against the bound");
  color_cmd->add_option("--sparsify", color.sparsify,
                        "Also emit a greedy (1+EPS) sparse spanner edge list");
  color_cmd->add_option("--edges-out", color.edges_out, "Sparse edge list path");

  TableOptions table;
  int k_min = 2;
  int k_max = 10;
  auto* table_cmd = app.add_subcommand("table", "Reproduce the simulation tables");
  table_cmd->add_option("--trials", table.config.trials, "Point sets per run")
      ->capture_default_str();
  table_cmd->add_option("--n", table.config.n, "Points per set")->capture_default_str();
  table_cmd->add_option("--k-min", k_min, "Smallest k")->capture_default_str();
  table_cmd->add_option("--k-max", k_max, "Largest k")->capture_default_str();
  table_cmd->add_option("--modes", table.modes, "offline_k, online_k, offline_specialized")
      ->capture_default_str();
  table_cmd->add_option("--seed", table.config.seed, "RNG seed")->capture_default_str();
  table_cmd->add_option("--threads", table.config.threads,
                        "Worker threads (0: CHROMOSPAN_THREADS or hardware)");
  table_cmd->add_option("--format", table.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table.out, "Output path (default stdout)");

  LowerBoundOptions lb;
  auto* lb_cmd = app.add_subcommand("lowerbound", "Generate a lower-bound construction");
  lb_cmd->add_option("--family", lb.family, "k2, k3, k4, kgon, online, online-probe-k3")
      ->required()
      ->check(CLI::IsMember({"k2", "k3", "k4", "kgon", "online", "online-probe-k3"}));
  lb_cmd->add_option("--n", lb.n, "Polygon size for k2/k3/k4")->capture_default_str();
  lb_cmd->add_option("--k", lb.k, "Colors for kgon/online")->capture_default_str();
  lb_cmd->add_option("--out", lb.out, "Write the points to this file");
  lb_cmd->add_flag("--bruteforce", lb.bruteforce, "Confirm the bound by exhaustive search");
  lb_cmd->add_option("--budget", lb.budget, "Max colorings to enumerate");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Measure the stretch of a coloring");
  verify_cmd->add_option("--in", verify.in, "Point file")->required();
  verify_cmd->add_option("--coloring", verify.coloring, "Coloring CSV")->required();
  verify_cmd->add_option("--k", verify.k, "Color count (default: largest color)");
  verify_cmd->add_option("--t", verify.t, "Also test the t-ellipse property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*color_cmd) return run_color(color);
    if (*table_cmd) {
      if (k_min < 2 || k_max < k_min) {
        std::cerr << "error: need 2 <= --k-min <= --k-max\n";
        return kExitUsage;
      }
      table.config.ks.clear();
      for (int k = k_min; k <= k_max; ++k) table.config.ks.push_back(k);
      return run_table(table);
    }
    if (*lb_cmd) return run_lowerbound(lb);
    if (*verify_cmd) return run_verify(verify);
  } catch (const cs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = e.code() == cs::ErrorCode::BadK || e.code() == cs::ErrorCode::BadN ||
                       e.code() == cs::ErrorCode::InvalidArgument;
    return usage ? kExitUsage : 3;
  }
  return kExitUsage;
}
