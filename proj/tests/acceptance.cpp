// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "chromospan/analysis.hpp"
#include "chromospan/coloring.hpp"
#include "chromospan/constructions.hpp"
#include "chromospan/experiment.hpp"
#include "chromospan/offline.hpp"
#include "chromospan/online.hpp"
#include "chromospan/proximity.hpp"
#include "test_support.hpp"

using namespace chromospan;
using chromospan::testing::random_coloring;
using chromospan::testing::random_points;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

std::vector<PointSet> random_sets(std::uint64_t base) {
  const std::size_t sizes[] = {10, 30, 50};
  std::vector<PointSet> sets;
  for (std::uint64_t i = 0; i < 100; ++i) sets.push_back(random_points(base + i, sizes[i % 3]));
  return sets;
}

void check_bound(Outcome& o, const char* what, double stretch, double bound, std::size_t set) {
  if (!(stretch <= bound + 1e-9)) {
    std::ostringstream s;
    s << what << " on set " << set << ": stretch " << stretch << " > bound " << bound;
    o.fail(s.str());
  }
}

Outcome hard_bounds() {
  Outcome o;
  const std::vector<PointSet> sets = random_sets(10'000);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const PointSet& pts = sets[i];
    check_bound(o, "mst2", stretch_factor(pts, color_mst_2(pts)).stretch, mst2_bound(), i);
    check_bound(o, "ellipse3", stretch_factor(pts, color_ellipse_3(pts).coloring).stretch,
                ellipse3_bound(), i);
    check_bound(o, "delaunay4", stretch_factor(pts, color_delaunay_4(pts)).stretch,
                delaunay4_bound(), i);
    for (int k = 5; k <= 10; ++k) {
      check_bound(o, "cones", stretch_factor(pts, color_cones_k(pts, k)).stretch,
                  cones_bound(k), i);
    }
    for (int k = 2; k <= 10; ++k) {
      OnlineColorer colorer(k);
      for (const Point& p : pts) {
        colorer.insert(p);
        check_bound(o, "online prefix", colorer.finalize_stretch().stretch, online_bound(k), i);
      }
    }
  }
  o.detail << (o.pass ? "all 100 sets within bounds" : "");
  return o;
}

Outcome structure() {
  Outcome o;
  const std::vector<PointSet> sets = random_sets(20'000);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const PointSet& pts = sets[i];
    const EllipseColoring ec = color_ellipse_3(pts);
    if (!is_triangle_free(ec.graph.edges)) o.fail("ellipse graph has a triangle on set " + std::to_string(i));
    if (!is_plane_graph(pts, ec.graph.edges)) o.fail("ellipse graph not plane on set " + std::to_string(i));
    if (!proper_color_exact(pts.size(), ec.graph.edges, 3)) {
      o.fail("ellipse graph not 3-colorable on set " + std::to_string(i));
    }
    const Triangulation dt = delaunay(pts);
    const auto four = proper_color_exact(pts.size(), dt.edges, 4);
    if (!four || !is_proper(*four, dt.edges)) o.fail("Delaunay 4-coloring failed on set " + std::to_string(i));
  }
  o.detail << (o.pass ? "triangle-free, plane, 3-colorable; Delaunay 4-colorable on all 100" : "");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 39;
    const int k = 2 + static_cast<int>(i % 7);
    const PointSet pts = random_points(30'000 + i, n);
    const Coloring c = random_coloring(40'000 + i, n, k);
    const StretchReport a = stretch_factor(pts, c);
    const StretchReport b = dijkstra_stretch(pts, bichromatic_edges(c));
    if (a.unbounded != b.unbounded) {
      o.fail("boundedness differs on instance " + std::to_string(i));
      continue;
    }
    if (a.unbounded) continue;
    worst = std::max(worst, std::abs(a.stretch - b.stretch));
  }
  if (worst > 1e-9) o.fail("max difference too large");
  o.detail << "max |difference| = " << worst;
  return o;
}

Outcome lower_bounds() {
  Outcome o;
  struct Case {
    const char* name;
    LowerBoundInstance inst;
    double expected;
  };
  const Case cases[] = {{"pentagon k=2", gen_lb_k2(5), 2.618033},
                        {"n=5 k=3", gen_lb_k3(5), 1.094636},
                        {"n=5 k=4", gen_lb_k4(5), 1.122326},
                        {"hexagon k=5", gen_lb_kgon(5), 1.154701},
                        {"heptagon k=6", gen_lb_kgon(6), 1.109916}};
  for (const Case& c : cases) {
    const double opt = optimal_coloring_bruteforce(c.inst.points, c.inst.k).stretch;
    o.detail << c.name << " opt=" << opt << "; ";
    if (!(opt >= c.expected - 1e-6)) o.fail(std::string(c.name) + " below bound; ");
  }
  return o;
}

struct PublishedRow {
  int k;
  double off50, on50, off200, on200;
};

constexpr PublishedRow kPublished[] = {
    {2, 2.2383, 2.5208, 2.5390, 2.7844}, {3, 1.7219, 2.1111, 1.9245, 2.3743},
    {4, 1.4907, 1.8608, 1.6377, 2.0866}, {5, 1.3631, 1.7300, 1.4831, 1.9062},
    {6, 1.2877, 1.6098, 1.3809, 1.7579}, {7, 1.2329, 1.5456, 1.3079, 1.6563},
    {8, 1.1947, 1.4778, 1.2579, 1.5833}, {9, 1.1658, 1.4175, 1.2283, 1.5149},
    {10, 1.1384, 1.3765, 1.1945, 1.4677}};

ResultTable table_for(int n) {
  ExperimentConfig cfg;
  cfg.trials = 200;
  cfg.n = n;
  return run_experiment(cfg);
}

Outcome table_reproduction(const ResultTable& t50, const ResultTable& t200) {
  Outcome o;
  double worst = 0.0;
  for (const PublishedRow& row : kPublished) {
    const double diffs[] = {t50.at(row.k, Mode::OfflineK).mean - row.off50,
                            t50.at(row.k, Mode::OnlineK).mean - row.on50,
                            t200.at(row.k, Mode::OfflineK).mean - row.off200,
                            t200.at(row.k, Mode::OnlineK).mean - row.on200};
    const char* labels[] = {"offline n=50", "online n=50", "offline n=200", "online n=200"};
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs(diffs[j]));
      if (std::abs(diffs[j]) > 0.08) {
        std::ostringstream s;
        s << labels[j] << " k=" << row.k << " off by " << diffs[j] << "; ";
        o.fail(s.str());
      }
    }
  }
  o.detail << "max |mean - published| = " << worst;
  return o;
}

Outcome qualitative(const ResultTable& t50, const ResultTable& t200) {
  Outcome o;
  for (const ResultTable* t : {&t50, &t200}) {
    const char* n = t == &t50 ? "n=50" : "n=200";
    for (int k = 2; k <= 10; ++k) {
      if (!(t->at(k, Mode::OfflineK).mean < t->at(k, Mode::OnlineK).mean)) {
        o.fail(std::string(n) + " offline >= online at k=" + std::to_string(k) + "; ");
      }
      if (k > 2) {
        for (Mode m : {Mode::OfflineK, Mode::OnlineK}) {
          if (!(t->at(k, m).mean < t->at(k - 1, m).mean)) {
            o.fail(std::string(n) + " " + to_string(m) + " mean not decreasing at k=" +
                   std::to_string(k) + "; ");
          }
        }
      }
    }
  }
  for (int k = 4; k <= 10; ++k) {
    if (!(t200.at(k, Mode::OnlineK).mean > cones_bound(k))) {
      o.fail("n=200 online mean below offline worst case at k=" + std::to_string(k) + "; ");
    }
  }
  o.detail << (o.pass ? "offline < online, decreasing in k, online(n=200) > offline bound for k>=4" : "");
  return o;
}

Outcome sparsifier() {
  Outcome o;
  constexpr double eps = 0.5;
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::size_t counts[2] = {0, 0};
    for (int j = 0; j < 2; ++j) {
      const PointSet pts = random_points(50'000 + seed * 2 + static_cast<std::uint64_t>(j), j == 0 ? 200 : 400);
      const Coloring c = color_cones_k(pts, 4);
      const SparseSpanner sp = sparsify_greedy(pts, c, eps);
      counts[j] = sp.edges.size();
      for (const Edge& e : sp.edges) {
        if (c[e.u] == c[e.v]) o.fail("monochromatic edge; ");
      }
      if (j == 0) {
        const double got = dijkstra_stretch(pts, sp.edges).stretch;
        const double limit = (1 + eps) * stretch_factor(pts, c).stretch + 1e-9;
        if (!(got <= limit)) o.fail("sparse stretch above (1+eps) t on seed " + std::to_string(seed) + "; ");
      }
    }
    ratio_sum += static_cast<double>(counts[1]) / static_cast<double>(counts[0]);
  }
  const double ratio = ratio_sum / 20.0;
  if (!(ratio <= 2.5)) o.fail("edge growth ratio above 2.5; ");
  o.detail << "mean |E(400)|/|E(200)| = " << ratio;
  return o;
}

Outcome online_adversary() {
  Outcome o;
  for (int k = 5; k <= 10; ++k) {
    OnlineColorer colorer(k);
    const AdversaryOutcome out = run_adversary(k, [&](const Point& p) { return colorer.insert(p); });
    const double lo = 1.0 / std::cos(kPi / k) - 1e-6;
    const double hi = online_bound(k) + 1e-9;
    o.detail << "k=" << k << " stretch=" << out.final_stretch << "; ";
    if (!(out.final_stretch >= lo && out.final_stretch <= hi)) {
      o.fail("k=" + std::to_string(k) + " outside bracket; ");
    }
  }
  return o;
}

template <class F>
bool report(int id, const char* title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%.1fs) -- %s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "hard stretch bounds", hard_bounds);
  ok &= report(2, "structural properties", structure);
  ok &= report(3, "stretch oracle equivalence", oracle_equivalence);
  ok &= report(4, "brute-force lower bounds", lower_bounds);

  const auto t0 = std::chrono::steady_clock::now();
  const ResultTable t50 = table_for(50);
  const ResultTable t200 = table_for(200);
  const double table_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("(tables: 2 x 200 trials in %.1fs)\n", table_secs);
  for (const PublishedRow& row : kPublished) {
    std::printf("  k=%2d  n=50 offline %.4f (%.4f) online %.4f (%.4f) | n=200 offline %.4f (%.4f) online %.4f (%.4f)\n",
                row.k, t50.at(row.k, Mode::OfflineK).mean, row.off50, t50.at(row.k, Mode::OnlineK).mean,
                row.on50, t200.at(row.k, Mode::OfflineK).mean, row.off200,
                t200.at(row.k, Mode::OnlineK).mean, row.on200);
  }
  ok &= report(5, "table reproduction", [&] { return table_reproduction(t50, t200); });
  ok &= report(6, "qualitative claims", [&] { return qualitative(t50, t200); });
  ok &= report(7, "sparsifier contract", sparsifier);
  ok &= report(8, "online adversary bracket", online_adversary);
  return ok ? 0 : 1;
}
