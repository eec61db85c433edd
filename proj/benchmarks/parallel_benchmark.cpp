// Serial vs OpenMP timings for the three data-parallel harness kernels:
// batch edge evaluation, prior estimation over training worlds, and the
// benchmark fan-out.  The serial paths are the reference implementations the
// unit tests compare against; this target reports wall-time ratios on the
// current machine (on a single hardware thread the honest answer is ~1x).

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gls/bench.hpp"
#include "gls/engine.hpp"
#include "gls/graph.hpp"
#include "gls/heuristic.hpp"
#include "gls/world.hpp"

using namespace gls;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const auto& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-22s %10.3fs %10.3fs %8.2fx %s\n", name, serial, parallel,
              serial / parallel, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time; both columns run serially\n");
#endif

  const int n = 1500;
  const std::vector<int> bases = {2, 3};
  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  for (int i = 1; static_cast<int>(pts.size()) < n; ++i) {
    auto p = halton_point(i, bases);
    if (!twowall_static_blocked(p[0], p[1])) pts.push_back(std::move(p));
  }
  const Graph raw = build_rgg(pts, default_connection_radius(n, 2));
  EnvParams params;
  std::vector<BitmapWorld> worlds;
  for (int i = 0; i < 12; ++i)
    worlds.push_back(generate_world(EnvKind::TwoWall, 1000 + 64 * i, params));
  std::vector<const World*> world_ptrs;
  for (const auto& w : worlds) world_ptrs.push_back(&w);
  std::printf("graph: %d vertices, %d edges; %zu worlds\n\n",
              raw.num_vertices(), raw.num_edges(), worlds.size());
  std::printf("%-22s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  // 1. batch collision checking
  std::vector<std::uint8_t> serial_bits, parallel_bits;
  const double t_eval_s = time_of(
      [&] { serial_bits = evaluate_all(raw, worlds[0], false); }, 3);
  const double t_eval_p = time_of(
      [&] { parallel_bits = evaluate_all(raw, worlds[0], true); }, 3);
  row("evaluate_all", t_eval_s, t_eval_p, serial_bits == parallel_bits);

  // 2. prior estimation across training worlds
  PriorModel serial_pm, parallel_pm;
  const double t_prior_s =
      time_of([&] { serial_pm = estimate_priors(raw, world_ptrs, false); }, 3);
  const double t_prior_p =
      time_of([&] { parallel_pm = estimate_priors(raw, world_ptrs, true); }, 3);
  row("estimate_priors", t_prior_s, t_prior_p,
      serial_pm.prior == parallel_pm.prior &&
          serial_pm.p_max == parallel_pm.p_max);

  // 3. benchmark fan-out over (config, world) runs
  const Graph g = raw.with_priors(serial_pm.prior);
  const std::vector<double> lo = {0.05, 0.05}, hi = {0.95, 0.95};
  const int source = nearest_vertex(g, lo), target = nearest_vertex(g, hi);
  const auto h = make_euclidean_heuristic(g, target);
  std::vector<WorldCase> cases;
  for (std::size_t i = 0; i < worlds.size(); ++i)
    cases.push_back(WorldCase{&worlds[i], 1000 + 64 * i});
  const auto configs = standard_sweep(2, 0.5);
  const CostModel cost;
  std::vector<BenchRow> serial_rows, parallel_rows;
  const double t_bench_s = time_of(
      [&] {
        serial_rows = run_bench(g, "twowall", cases, configs, source, target,
                                h, cost, false);
      },
      1);
  const double t_bench_p = time_of(
      [&] {
        parallel_rows = run_bench(g, "twowall", cases, configs, source, target,
                                  h, cost, true);
      },
      1);
  bool rows_equal = serial_rows.size() == parallel_rows.size();
  for (std::size_t i = 0; rows_equal && i < serial_rows.size(); ++i) {
    const auto& a = serial_rows[i];
    const auto& b = parallel_rows[i];
    rows_equal = a.edges_evaluated == b.edges_evaluated &&
                 a.vertex_rewires == b.vertex_rewires &&
                 a.cost_total == b.cost_total && a.path_cost == b.path_cost &&
                 a.feasible == b.feasible;
  }
  row("run_bench fan-out", t_bench_s, t_bench_p, rows_equal);
  return 0;
}
