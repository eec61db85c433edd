// gls-bench: generate environments, train priors, sweep toggle
// configurations over test worlds, and emit CSV results.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or input-file error,
// 3 internal assertion failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gls/analysis.hpp"
#include "gls/bench.hpp"
#include "gls/engine.hpp"
#include "gls/graph.hpp"
#include "gls/heuristic.hpp"
#include "gls/io.hpp"
#include "gls/toggles.hpp"
#include "gls/world.hpp"

namespace fs = std::filesystem;
using namespace gls;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<double> parse_double_list(const std::string& csv,
                                      const std::string& what) {
  std::vector<double> out;
  for (const auto& tok : split_list(csv)) out.push_back(parse_double(tok, what));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv,
                                const std::string& what) {
  std::vector<int> out;
  for (const auto& tok : split_list(csv))
    out.push_back(static_cast<int>(parse_long(tok, what)));
  if (out.empty()) throw UsageError(what + " list is empty");
  return out;
}

// Halton-sampled random geometric graph over the unit square; indices start
// at 1 so the degenerate origin point is skipped.  Samples inside statically
// known obstacles (the two-wall slabs) are rejected, the same way a roadmap
// builder would reject self-colliding configurations: only the gap placement
// is a per-world unknown.
Graph make_halton_rgg(int n, double gamma, EnvKind kind) {
  const std::vector<int> bases = {2, 3};
  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  for (int i = 1; static_cast<int>(pts.size()) < n; ++i) {
    auto p = halton_point(i, bases);
    if (kind == EnvKind::TwoWall && twowall_static_blocked(p[0], p[1]))
      continue;
    pts.push_back(std::move(p));
  }
  return build_rgg(pts, default_connection_radius(n, 2, gamma));
}

std::vector<std::string> sorted_world_files(const std::string& dir,
                                            const std::string& prefix) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) == 0 && name.size() > 6 &&
        name.substr(name.size() - 6) == ".world")
      names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::unique_ptr<World>> load_worlds(
    const std::vector<std::string>& files) {
  std::vector<std::unique_ptr<World>> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_world(f));
  return out;
}

struct Endpoints {
  int source = 0;
  int target = 0;
};

Endpoints corner_endpoints(const Graph& g) {
  const std::vector<double> lo = {0.05, 0.05}, hi = {0.95, 0.95};
  return Endpoints{nearest_vertex(g, lo), nearest_vertex(g, hi)};
}

// ------------------------------------------------------------------ generate
int cmd_generate(const std::string& env, int n, double gamma,
                 int num_train, int num_test, std::uint64_t seed,
                 int resolution, double density, const std::string& out_dir) {
  if (n < 1 || num_train < 0 || num_test < 0)
    throw UsageError("sizes must be >= 1 (counts >= 0)");
  const EnvKind kind = parse_env_kind(env);
  EnvParams params;
  params.resolution = resolution;
  params.forest_density = density;
  fs::create_directories(out_dir);
  Graph g = make_halton_rgg(n, gamma, kind);
  save_graph(g, out_dir + "/graph.txt");
  char name[64];
  for (int i = 0; i < num_train; ++i) {
    BitmapWorld w = generate_world(kind, train_world_seed(seed, i), params);
    std::snprintf(name, sizeof name, "/train_%03d.world", i);
    save_world(w, out_dir + name);
  }
  for (int i = 0; i < num_test; ++i) {
    BitmapWorld w = generate_world(kind, test_world_seed(seed, i), params);
    std::snprintf(name, sizeof name, "/test_%03d.world", i);
    save_world(w, out_dir + name);
  }
  std::printf("wrote %s/graph.txt (%d vertices, %d edges), %d training and "
              "%d test worlds\n",
              out_dir.c_str(), g.num_vertices(), g.num_edges(), num_train,
              num_test);
  return 0;
}

// --------------------------------------------------------------------- train
int cmd_train(const std::string& graph_file, const std::string& worlds_dir,
              const std::string& out_file) {
  Graph g = load_graph(graph_file);
  const auto files = sorted_world_files(worlds_dir, "train_");
  if (files.empty())
    throw std::runtime_error("no train_*.world files in " + worlds_dir);
  const auto storage = load_worlds(files);
  std::vector<const World*> worlds;
  for (const auto& w : storage) worlds.push_back(w.get());
  PriorModel pm = estimate_priors(g, worlds);
  save_priors(pm, out_file);
  std::printf("trained on %zu worlds; p_max = %s; wrote %s\n", worlds.size(),
              format_double(pm.p_max).c_str(), out_file.c_str());
  return 0;
}

// --------------------------------------------------------------------- bench
std::vector<ToggleConfig> build_configs(const std::string& events,
                                        const std::string& selectors,
                                        int alpha, double delta) {
  std::vector<ToggleConfig> configs;
  for (const auto& ev : split_list(events)) {
    for (const auto& sel : split_list(selectors)) {
      ToggleConfig c;
      c.event = parse_event_kind(ev);
      c.selector = parse_selector_kind(sel);
      c.alpha = alpha;
      c.delta = delta;
      configs.push_back(c);
    }
  }
  if (configs.empty()) throw UsageError("no (event, selector) combinations");
  return configs;
}

int cmd_bench(const std::string& graph_file, const std::string& priors_file,
              const std::string& worlds_dir, const std::string& env,
              const std::string& events, const std::string& selectors,
              int alpha, double delta, const std::string& heuristic_tag,
              const CostModel& cost, bool serial, const std::string& out_file) {
  Graph raw = load_graph(graph_file);
  Graph g = priors_file.empty()
                ? raw
                : raw.with_priors(
                      load_priors(priors_file, raw.num_edges()).prior);
  const auto files = sorted_world_files(worlds_dir, "test_");
  if (files.empty())
    throw std::runtime_error("no test_*.world files in " + worlds_dir);
  const auto storage = load_worlds(files);
  std::vector<WorldCase> cases;
  for (std::size_t i = 0; i < storage.size(); ++i)
    cases.push_back(WorldCase{storage[i].get(), static_cast<std::uint64_t>(i)});
  const auto configs = build_configs(events, selectors, alpha, delta);
  const Endpoints ep = corner_endpoints(g);
  const auto h =
      make_heuristic(parse_heuristic_kind(heuristic_tag), g, ep.target);
  const auto rows = run_bench(g, env, cases, configs, ep.source, ep.target, h,
                              cost, !serial);
  if (!out_file.empty()) write_bench_csv(rows, out_file);

  const auto summaries = summarize(rows, configs.size(), cases.size());
  std::size_t infeasible = 0;
  for (const auto& r : rows) infeasible += !r.feasible;
  std::printf("%zu rows (%zu configs x %zu worlds), %zu infeasible runs%s%s\n",
              rows.size(), configs.size(), cases.size(), infeasible,
              out_file.empty() ? "" : ", csv: ",
              out_file.c_str());
  std::printf("%-12s %10s %12s %14s %9s\n", "config", "med_evals",
              "med_rewires", "med_cost", "feasible");
  for (std::size_t c = 0; c < configs.size(); ++c) {
    std::printf("%-12s %10.1f %12.1f %14.6f %6zu/%zu\n",
                toggle_label(configs[c]).c_str(), summaries[c].median_evals,
                summaries[c].median_rewires, summaries[c].median_cost,
                summaries[c].feasible, cases.size());
  }
  const auto ranks = rank_table(rows, configs.size(), cases.size());
  std::printf("rank-frequency %% (rows: config, cols: rank 1..%zu)\n",
              configs.size());
  for (std::size_t c = 0; c < configs.size(); ++c) {
    std::printf("%-12s", toggle_label(configs[c]).c_str());
    for (double pct : ranks[c]) std::printf(" %5.1f", pct);
    std::printf("\n");
  }
  return 0;
}

// ------------------------------------------------------------ counterexample
int cmd_counterexample(int chain_n, int fan_l, const std::string& out_file) {
  std::vector<int> chains =
      chain_n > 0 ? std::vector<int>{chain_n} : std::vector<int>{25, 50, 100, 200};
  std::vector<int> fans =
      fan_l > 0 ? std::vector<int>{fan_l} : std::vector<int>{4, 8, 16, 32};
  std::vector<double> xs, ys, log_x, log_y;
  std::string csv = "chain_n,fan_l,edges,rewires_uninformed,rewires_informed\n";
  std::printf("%8s %6s %7s %12s %10s\n", "chain_n", "fan_l", "edges",
              "uninformed", "informed");
  for (int n : chains) {
    for (int l : fans) {
      Counterexample ce = build_counterexample(n, l);
      const int expect_edges = 3 * n + 2 * l - 1;
      if (ce.graph.num_edges() != expect_edges)
        throw std::logic_error("counterexample edge count mismatch");
      Preset lazysp = make_preset("lazysp");
      RunResult un =
          gls_run(ce.graph, ce.world, ce.source, ce.target, lazysp.event,
                  lazysp.selector, make_zero_heuristic(ce.graph));
      RunResult inf = gls_run(ce.graph, ce.world, ce.source, ce.target,
                              Event::heuristic_progress(), Selector::forward(),
                              graph_distance_heuristic(ce.graph, ce.target));
      std::printf("%8d %6d %7d %12zu %10zu\n", n, l, ce.graph.num_edges(),
                  un.rewires.total(), inf.rewires.total());
      csv += std::to_string(n) + "," + std::to_string(l) + "," +
             std::to_string(ce.graph.num_edges()) + "," +
             std::to_string(un.rewires.total()) + "," +
             std::to_string(inf.rewires.total()) + "\n";
      xs.push_back(static_cast<double>(n) * l);
      ys.push_back(static_cast<double>(un.rewires.total()));
      if (un.rewires.total() > 0) {
        log_x.push_back(std::log(static_cast<double>(n) * l));
        log_y.push_back(std::log(static_cast<double>(un.rewires.total())));
      }
    }
  }
  if (xs.size() > 1) {
    const auto prop = fit_proportional(xs, ys);
    std::printf("uninformed rewires ~ c * (chain_n * fan_l): c = %.4f, "
                "R^2 = %.5f\n",
                prop.c, prop.r2);
    if (log_x.size() > 1) {
      const auto ll = fit_linear(log_x, log_y);
      std::printf("log-log growth exponent: %.4f (1 = linear)\n", ll.slope);
    }
  }
  if (!out_file.empty()) {
    std::FILE* f = std::fopen(out_file.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + out_file);
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  return 0;
}

// ------------------------------------------------------------------- scaling
int cmd_scaling(const std::string& env, const std::string& sizes_csv,
                const std::string& densities_csv, double gamma,
                std::uint64_t seed, int num_train, int num_test,
                int resolution, double delta, const CostModel& cost,
                const std::string& out_file) {
  const EnvKind kind = parse_env_kind(env);
  struct Point {
    std::string label;
    int n;
    EnvParams params;
  };
  std::vector<Point> points;
  if (!densities_csv.empty()) {
    for (double d : parse_double_list(densities_csv, "--densities")) {
      EnvParams p;
      p.resolution = resolution;
      p.forest_density = d;
      points.push_back({"density=" + format_double(d), 1000, p});
    }
  } else {
    for (int n : parse_int_list(sizes_csv, "--sizes")) {
      EnvParams p;
      p.resolution = resolution;
      points.push_back({"n=" + std::to_string(n), n, p});
    }
  }
  std::string csv = "point,n,median_cost_sp,median_cost_se,median_gap\n";
  std::vector<double> xs, gaps;
  std::printf("%16s %10s %14s %14s %12s\n", "point", "feasible", "cost(sp+ff)",
              "cost(se+ff)", "gap");
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const auto& pt = points[pi];
    Graph raw = make_halton_rgg(pt.n, gamma, kind);
    std::vector<BitmapWorld> train_storage;
    for (int i = 0; i < num_train; ++i)
      train_storage.push_back(
          generate_world(kind, train_world_seed(seed, i), pt.params));
    std::vector<const World*> train;
    for (const auto& w : train_storage) train.push_back(&w);
    Graph g = raw.with_priors(estimate_priors(raw, train).prior);
    std::vector<BitmapWorld> test_storage;
    for (int i = 0; i < num_test; ++i)
      test_storage.push_back(
          generate_world(kind, test_world_seed(seed, i), pt.params));
    std::vector<WorldCase> cases;
    for (int i = 0; i < num_test; ++i)
      cases.push_back(WorldCase{&test_storage[i], test_world_seed(seed, i)});
    const Endpoints ep = corner_endpoints(g);
    const auto h = make_euclidean_heuristic(g, ep.target);
    const std::vector<ToggleConfig> configs = {
        ToggleConfig{EventKind::ShortestPath, SelectorKind::FailFast, 1, 0.0},
        ToggleConfig{EventKind::SubpathExistence, SelectorKind::FailFast, 1,
                     delta}};
    const auto rows = run_bench(g, env, cases, configs, ep.source, ep.target,
                                h, cost);
    std::vector<double> sp_costs, se_costs, diffs;
    for (int w = 0; w < num_test; ++w) {
      const auto& rsp = rows[w];
      const auto& rse = rows[num_test + w];
      if (rsp.feasible && rse.feasible) {
        sp_costs.push_back(rsp.cost_total);
        se_costs.push_back(rse.cost_total);
        diffs.push_back(rsp.cost_total - rse.cost_total);
      }
    }
    if (diffs.empty()) {
      std::printf("%16s %10s\n", pt.label.c_str(), "0 -- skipped");
      continue;
    }
    const double msp = median(sp_costs), mse = median(se_costs),
                 gap = median(diffs);
    std::printf("%16s %7zu/%d %14.6f %14.6f %12.6f\n", pt.label.c_str(),
                diffs.size(), num_test, msp, mse, gap);
    csv += pt.label + "," + std::to_string(pt.n) + "," + format_double(msp) +
           "," + format_double(mse) + "," + format_double(gap) + "\n";
    xs.push_back(densities_csv.empty() ? static_cast<double>(pt.n)
                                       : pt.params.forest_density);
    gaps.push_back(gap);
  }
  if (xs.size() >= 3) {
    const auto sr = spearman(xs, gaps);
    std::printf("gap trend: spearman rho = %.3f, one-sided p = %.4f\n", sr.rho,
                sr.p_value);
  }
  if (!out_file.empty()) {
    std::FILE* f = std::fopen(out_file.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + out_file);
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  return 0;
}

// -------------------------------------------------------------------- pareto
int cmd_pareto(const std::string& graph_file, const std::string& priors_file,
               const std::string& worlds_dir, const std::string& deltas_csv,
               const std::string& selector_tag, const CostModel& cost,
               const std::string& out_file) {
  Graph raw = load_graph(graph_file);
  Graph g = priors_file.empty()
                ? raw
                : raw.with_priors(
                      load_priors(priors_file, raw.num_edges()).prior);
  const auto files = sorted_world_files(worlds_dir, "train_");
  if (files.empty())
    throw std::runtime_error("no train_*.world files in " + worlds_dir);
  const auto storage = load_worlds(files);
  std::vector<const World*> worlds;
  for (const auto& w : storage) worlds.push_back(w.get());
  const auto deltas = parse_double_list(deltas_csv, "--deltas");
  const Endpoints ep = corner_endpoints(g);
  const auto h = make_euclidean_heuristic(g, ep.target);
  const auto sweep =
      pareto_sweep(g, worlds, ep.source, ep.target, deltas,
                   parse_selector_kind(selector_tag), h, cost);
  std::string csv = "delta,median_evals,median_rewires,median_cost\n";
  double best_delta = deltas.front(), best_cost = 1e300;
  std::printf("%8s %12s %14s %14s\n", "delta", "med_evals", "med_rewires",
              "med_cost");
  for (const auto& p : sweep) {
    std::printf("%8.3f %12.1f %14.1f %14.6f\n", p.delta, p.median_evals,
                p.median_rewires, p.median_cost);
    csv += format_double(p.delta) + "," + format_double(p.median_evals) + "," +
           format_double(p.median_rewires) + "," +
           format_double(p.median_cost) + "\n";
    if (p.median_cost < best_cost) {
      best_cost = p.median_cost;
      best_delta = p.delta;
    }
  }
  std::printf("lowest median cost at delta = %g\n", best_delta);
  if (!out_file.empty()) {
    std::FILE* f = std::fopen(out_file.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot open for writing: " + out_file);
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lazy shortest-path benchmark harness"};
  app.require_subcommand(1);

  // Shared options (bound per subcommand below).
  std::string graph_file, priors_file, worlds_dir, out_path, env = "twowall";
  std::uint64_t seed = 1;
  CostModel cost;

  auto add_cost = [&](CLI::App* cmd) {
    cmd->add_option("--ceval", cost.c_eval, "cost per edge evaluation");
    cmd->add_option("--crwr", cost.c_rwr, "cost per vertex rewire");
  };

  // generate
  auto* gen = app.add_subcommand("generate", "write a graph and worlds");
  int n = 1000, num_train = 50, num_test = 50, resolution = 256;
  double gamma = 2.0, density = 0.5;
  gen->add_option("--env", env, "square|twowall|forest|maze");
  gen->add_option("--n", n, "graph size");
  gen->add_option("--gamma", gamma, "connection radius multiplier");
  gen->add_option("--train", num_train, "training world count");
  gen->add_option("--test", num_test, "test world count");
  gen->add_option("--seed", seed, "base seed");
  gen->add_option("--resolution", resolution, "occupancy grid resolution");
  gen->add_option("--density", density, "forest obstacle density");
  gen->add_option("--out", out_path, "output directory")->required();

  // train
  auto* train = app.add_subcommand("train", "estimate edge priors");
  train->add_option("--graph", graph_file, "graph file")->required();
  train->add_option("--worlds", worlds_dir, "directory with train_*.world")
      ->required();
  train->add_option("--out", out_path, "priors output file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "run a toggle sweep");
  std::string events = "sp,cd,se", selectors = "f,a,ff", heuristic = "euclid";
  int alpha = 1;
  double delta = 0.5;
  bool serial = false;
  bench->add_option("--graph", graph_file, "graph file")->required();
  bench->add_option("--priors", priors_file, "trained priors file");
  bench->add_option("--worlds", worlds_dir, "directory with test_*.world")
      ->required();
  bench->add_option("--env", env, "environment tag for the CSV");
  bench->add_option("--event", events, "comma list of sp|cd|hp|se");
  bench->add_option("--selector", selectors, "comma list of f|a|ff");
  bench->add_option("--alpha", alpha, "constant-depth threshold");
  bench->add_option("--delta", delta, "existence threshold");
  bench->add_option("--heuristic", heuristic, "zero|euclid|graph");
  bench->add_flag("--serial", serial, "disable the parallel fan-out");
  bench->add_option("--out", out_path, "CSV output file");
  add_cost(bench);

  // counterexample
  auto* ce = app.add_subcommand("counterexample",
                                "adversarial fan/chain construction");
  int ce_n = 0, ce_l = 0;
  ce->add_option("--n", ce_n, "chain length (default: grid 25..200)");
  ce->add_option("--fan", ce_l, "fan size, even (default: grid 4..32)");
  ce->add_option("--out", out_path, "CSV output file");

  // scaling
  auto* sc = app.add_subcommand("scaling", "cost gap across sizes/densities");
  std::string sizes = "250,500,750,1000,2000,4000", densities;
  int sc_train = 20, sc_test = 20, sc_res = 128;
  double sc_delta = 0.5;
  sc->add_option("--env", env, "square|twowall|forest|maze");
  sc->add_option("--sizes", sizes, "comma list of graph sizes");
  sc->add_option("--densities", densities,
                 "comma list of forest densities (overrides --sizes)");
  sc->add_option("--gamma", gamma, "connection radius multiplier");
  sc->add_option("--seed", seed, "base seed");
  sc->add_option("--train", sc_train, "training worlds per point");
  sc->add_option("--test", sc_test, "test worlds per point");
  sc->add_option("--resolution", sc_res, "occupancy grid resolution");
  sc->add_option("--delta", sc_delta, "existence threshold");
  sc->add_option("--out", out_path, "CSV output file");
  add_cost(sc);

  // pareto
  auto* pa = app.add_subcommand("pareto", "existence-threshold sweep");
  std::string deltas = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9", sel_tag = "ff";
  pa->add_option("--graph", graph_file, "graph file")->required();
  pa->add_option("--priors", priors_file, "trained priors file");
  pa->add_option("--worlds", worlds_dir, "directory with train_*.world")
      ->required();
  pa->add_option("--deltas", deltas, "comma list of thresholds");
  pa->add_option("--selector", sel_tag, "f|a|ff");
  pa->add_option("--out", out_path, "CSV output file");
  add_cost(pa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gen)
      return cmd_generate(env, n, gamma, num_train, num_test, seed, resolution,
                          density, out_path);
    if (*train) return cmd_train(graph_file, worlds_dir, out_path);
    if (*bench)
      return cmd_bench(graph_file, priors_file, worlds_dir, env, events,
                       selectors, alpha, delta, heuristic, cost, serial,
                       out_path);
    if (*ce) return cmd_counterexample(ce_n, ce_l, out_path);
    if (*sc)
      return cmd_scaling(env, sizes, densities, gamma, seed, sc_train, sc_test,
                         sc_res, sc_delta, cost, out_path);
    if (*pa)
      return cmd_pareto(graph_file, priors_file, worlds_dir, deltas, sel_tag,
                        cost, out_path);
    std::fprintf(stderr, "no subcommand\n");
    return 1;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 1;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
}
