#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gls/engine.hpp"
#include "gls/graph.hpp"
#include "gls/toggles.hpp"
#include "gls/world.hpp"

namespace gls {

// One event/selector combination under test; alpha matters only for the
// constant-depth event and delta only for the existence event.
struct ToggleConfig {
  EventKind event = EventKind::ShortestPath;
  SelectorKind selector = SelectorKind::Forward;
  int alpha = 1;
  double delta = 0.5;
};

std::string toggle_label(const ToggleConfig& c);  // e.g. "se(0.5)+ff", "cd(2)+f"
Event make_event(const ToggleConfig& c);
Selector make_selector(SelectorKind kind);

// The nine-combination sweep: {sp, cd, se} x {f, a, ff}.
std::vector<ToggleConfig> standard_sweep(int alpha, double delta);

struct WorldCase {
  const World* world = nullptr;
  std::uint64_t seed = 0;  // identity of the world (reporting only)
};

struct BenchRow {
  std::string env;
  std::uint64_t seed = 0;
  EventKind event = EventKind::ShortestPath;
  SelectorKind selector = SelectorKind::Forward;
  int alpha = 0;           // 0 unless the event is cd
  double delta = 0.0;      // 0 unless the event is se
  std::size_t edges_evaluated = 0;
  std::size_t vertex_rewires = 0;
  double cost_total = 0.0;
  double path_cost = 0.0;  // +inf when infeasible
  bool feasible = false;
  double wall_ms = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "env,seed,event,selector,alpha,delta,edges_evaluated,vertex_rewires,"
    "cost_total,path_cost,feasible,wall_ms";

std::string bench_row_csv(const BenchRow& row);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

// Runs every config on every world (rows config-major, then world order).
// Each finished run is certificate-checked; a failure is an internal error.
// parallel toggles the OpenMP fan-out over runs; rows land in fixed slots so
// output is deterministic either way (wall_ms aside).
std::vector<BenchRow> run_bench(const Graph& g, const std::string& env_name,
                                const std::vector<WorldCase>& worlds,
                                const std::vector<ToggleConfig>& configs,
                                int source, int target,
                                const std::vector<double>& heuristic,
                                const CostModel& cost, bool parallel = true);

// Per-config medians over feasible rows, in config order.
struct ConfigSummary {
  double median_evals = 0.0;
  double median_rewires = 0.0;
  double median_cost = 0.0;
  std::size_t feasible = 0;
};
std::vector<ConfigSummary> summarize(const std::vector<BenchRow>& rows,
                                     std::size_t num_configs,
                                     std::size_t num_worlds);

// Rank-frequency percentages: percent[c][r] = share of worlds where config c
// had the (r+1)-th lowest model cost (infeasible runs rank last; exact ties
// resolve by config order).  Each config's percentages sum to 100.
std::vector<std::vector<double>> rank_table(const std::vector<BenchRow>& rows,
                                            std::size_t num_configs,
                                            std::size_t num_worlds);

// Vertex nearest to a point (Euclidean; ties to the smaller id).
int nearest_vertex(const Graph& g, std::span<const double> point);

// Deterministic per-world base seeds: stride 64 leaves room for the
// regeneration rule (seed+1 on infeasible worlds) without collisions.
inline std::uint64_t train_world_seed(std::uint64_t base, int i) {
  return base + 64ULL * static_cast<std::uint64_t>(i);
}
inline std::uint64_t test_world_seed(std::uint64_t base, int i) {
  return base + 64ULL * static_cast<std::uint64_t>(i) + 32ULL;
}

}  // namespace gls
