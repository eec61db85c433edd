#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gls/graph.hpp"
#include "gls/lazy_tree.hpp"
#include "gls/toggles.hpp"
#include "gls/world.hpp"

namespace gls {

struct EvalRecord {
  int edge = -1;
  bool valid = false;
};

struct RunResult {
  std::optional<Path> path;          // nullopt = no feasible path
  std::vector<EvalRecord> evaluated; // in evaluation order; no repeats
  RewireLog rewires;
  std::size_t iterations = 0;        // extend/evaluate cycles
  double wall_seconds = 0.0;
};

// Unit costs of the two dominant operations; total model cost of a run is
// c_eval * |evaluations| + c_rwr * |rewires|.  Defaults anchor the measured
// per-evaluation cost and derive c_rwr from the measured cost ratio 29.04.
struct CostModel {
  double c_eval = 3.35e-4;
  double c_rwr = 3.35e-4 / 29.04;
  double ratio() const { return c_eval / c_rwr; }
};

double cost_total(const RunResult& r, const CostModel& m);
double cost_total(const CostModel& m, std::size_t evaluations,
                  std::size_t rewires);

struct IterationTrace {
  std::size_t iteration = 0;
  int leaf = -1;
  double leaf_f = 0.0;  // min(g,rhs)(leaf) + h(leaf) when returned
  int edge = -1;
  bool valid = false;
  std::size_t rewires = 0;
};
using TraceHook = std::function<void(const IterationTrace&)>;

// The full lazy search: repeatedly extend the tree until the event fires,
// then evaluate the selector's pick on the fired chain, repairing the tree
// on invalidations; terminates when the chain to the target is fully valid
// (returning it) or the lazy graph disconnects (returning nullopt).
RunResult gls_run(const Graph& g, const World& world, int source, int target,
                  Event event, Selector selector,
                  const std::vector<double>& heuristic,
                  const TraceHook& trace = nullptr);

// Reference shortest path with every edge evaluated up front (Dijkstra on
// the valid subgraph); the optimality oracle for tests.
std::optional<Path> oracle_shortest(const Graph& g, const World& world,
                                    int source, int target);

// Certificate check on a finished run: a returned path must consist solely
// of edges evaluated valid and be no longer than the best path that survives
// the recorded invalidations (tolerance 1e-9); an infeasible verdict must be
// backed by the recorded invalidations disconnecting source from target.
bool verify_certificate(const Graph& g, int source, int target,
                        const RunResult& r);

}  // namespace gls
