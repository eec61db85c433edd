#include "gls/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "gls/analysis.hpp"
#include "gls/io.hpp"
#include "gls/parallel.hpp"

namespace gls {

std::string toggle_label(const ToggleConfig& c) {
  std::string label = event_kind_tag(c.event);
  if (c.event == EventKind::ConstantDepth)
    label += "(" + std::to_string(c.alpha) + ")";
  if (c.event == EventKind::SubpathExistence) {
    char buf[32];  // short form: labels are for humans, the CSV keeps 17 digits
    std::snprintf(buf, sizeof buf, "%g", c.delta);
    label += "(" + std::string(buf) + ")";
  }
  return label + "+" + selector_kind_tag(c.selector);
}

Event make_event(const ToggleConfig& c) {
  switch (c.event) {
    case EventKind::ShortestPath: return Event::shortest_path();
    case EventKind::ConstantDepth: return Event::constant_depth(c.alpha);
    case EventKind::HeuristicProgress: return Event::heuristic_progress();
    case EventKind::SubpathExistence: return Event::subpath_existence(c.delta);
  }
  throw std::logic_error("bad EventKind");
}

Selector make_selector(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::Forward: return Selector::forward();
    case SelectorKind::Alternate: return Selector::alternate();
    case SelectorKind::FailFast: return Selector::fail_fast();
  }
  throw std::logic_error("bad SelectorKind");
}

std::vector<ToggleConfig> standard_sweep(int alpha, double delta) {
  std::vector<ToggleConfig> configs;
  for (EventKind e : {EventKind::ShortestPath, EventKind::ConstantDepth,
                      EventKind::SubpathExistence}) {
    for (SelectorKind s : {SelectorKind::Forward, SelectorKind::Alternate,
                           SelectorKind::FailFast}) {
      ToggleConfig c;
      c.event = e;
      c.selector = s;
      c.alpha = alpha;
      c.delta = delta;
      configs.push_back(c);
    }
  }
  return configs;
}

std::string bench_row_csv(const BenchRow& row) {
  std::string s;
  s += row.env;
  s += ',';
  s += std::to_string(row.seed);
  s += ',';
  s += event_kind_tag(row.event);
  s += ',';
  s += selector_kind_tag(row.selector);
  s += ',';
  s += std::to_string(row.alpha);
  s += ',';
  s += format_double(row.delta);
  s += ',';
  s += std::to_string(row.edges_evaluated);
  s += ',';
  s += std::to_string(row.vertex_rewires);
  s += ',';
  s += format_double(row.cost_total);
  s += ',';
  s += format_double(row.path_cost);
  s += ',';
  s += row.feasible ? '1' : '0';
  s += ',';
  s += format_double(row.wall_ms);
  return s;
}

void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kBenchCsvHeader << "\n";
  for (const BenchRow& row : rows) out << bench_row_csv(row) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<BenchRow> run_bench(const Graph& g, const std::string& env_name,
                                const std::vector<WorldCase>& worlds,
                                const std::vector<ToggleConfig>& configs,
                                int source, int target,
                                const std::vector<double>& heuristic,
                                const CostModel& cost, bool parallel) {
  if (worlds.empty()) throw std::invalid_argument("run_bench: no worlds");
  if (configs.empty()) throw std::invalid_argument("run_bench: no configs");
  std::vector<BenchRow> rows(configs.size() * worlds.size());
  parallel_for(rows.size(), parallel, [&](std::size_t idx) {
    const ToggleConfig& c = configs[idx / worlds.size()];
    const WorldCase& wc = worlds[idx % worlds.size()];
    RunResult r = gls_run(g, *wc.world, source, target, make_event(c),
                          make_selector(c.selector), heuristic);
    if (!verify_certificate(g, source, target, r))
      throw std::logic_error("run_bench: certificate check failed for " +
                             toggle_label(c));
    BenchRow& row = rows[idx];
    row.env = env_name;
    row.seed = wc.seed;
    row.event = c.event;
    row.selector = c.selector;
    row.alpha = c.event == EventKind::ConstantDepth ? c.alpha : 0;
    row.delta = c.event == EventKind::SubpathExistence ? c.delta : 0.0;
    row.edges_evaluated = r.evaluated.size();
    row.vertex_rewires = r.rewires.total();
    row.cost_total = cost_total(r, cost);
    row.path_cost =
        r.path ? r.path->weight : std::numeric_limits<double>::infinity();
    row.feasible = r.path.has_value();
    row.wall_ms = r.wall_seconds * 1e3;
  });
  return rows;
}

std::vector<ConfigSummary> summarize(const std::vector<BenchRow>& rows,
                                     std::size_t num_configs,
                                     std::size_t num_worlds) {
  if (rows.size() != num_configs * num_worlds)
    throw std::invalid_argument("summarize: row count mismatch");
  std::vector<ConfigSummary> out(num_configs);
  for (std::size_t c = 0; c < num_configs; ++c) {
    std::vector<double> evals, rewires, costs;
    for (std::size_t w = 0; w < num_worlds; ++w) {
      const BenchRow& row = rows[c * num_worlds + w];
      if (!row.feasible) continue;
      evals.push_back(static_cast<double>(row.edges_evaluated));
      rewires.push_back(static_cast<double>(row.vertex_rewires));
      costs.push_back(row.cost_total);
    }
    out[c].feasible = costs.size();
    out[c].median_evals = median(evals);
    out[c].median_rewires = median(rewires);
    out[c].median_cost = median(costs);
  }
  return out;
}

std::vector<std::vector<double>> rank_table(const std::vector<BenchRow>& rows,
                                            std::size_t num_configs,
                                            std::size_t num_worlds) {
  if (rows.size() != num_configs * num_worlds)
    throw std::invalid_argument("rank_table: row count mismatch");
  std::vector<std::vector<double>> percent(
      num_configs, std::vector<double>(num_configs, 0.0));
  for (std::size_t w = 0; w < num_worlds; ++w) {
    std::vector<std::size_t> order(num_configs);
    for (std::size_t c = 0; c < num_configs; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const BenchRow& ra = rows[a * num_worlds + w];
      const BenchRow& rb = rows[b * num_worlds + w];
      const double ca =
          ra.feasible ? ra.cost_total : std::numeric_limits<double>::infinity();
      const double cb =
          rb.feasible ? rb.cost_total : std::numeric_limits<double>::infinity();
      return ca < cb;
    });
    for (std::size_t r = 0; r < num_configs; ++r) percent[order[r]][r] += 1.0;
  }
  for (auto& row : percent)
    for (double& v : row) v *= 100.0 / static_cast<double>(num_worlds);
  return percent;
}

int nearest_vertex(const Graph& g, std::span<const double> point) {
  if (g.num_vertices() == 0) throw std::invalid_argument("nearest_vertex: empty graph");
  if (static_cast<int>(point.size()) != g.dim())
    throw std::invalid_argument("nearest_vertex: dimension mismatch");
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& pos = g.vertex(v).position;
    double s = 0.0;
    for (std::size_t k = 0; k < point.size(); ++k) {
      const double d = pos[k] - point[k];
      s += d * d;
    }
    if (s < best_d) {
      best_d = s;
      best = v;
    }
  }
  return best;
}

}  // namespace gls
