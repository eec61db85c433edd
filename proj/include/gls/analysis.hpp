#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gls/engine.hpp"
#include "gls/graph.hpp"
#include "gls/toggles.hpp"
#include "gls/world.hpp"

namespace gls {

// Expected number of evaluations when checking a chain of independently
// valid edges (validity probability priors[i]) in the given order, counting
// only runs that stop at the first invalid edge:
//   sum_l (prod_{m<l} p_m) (1 - p_l) * l.
double expected_evals(std::span<const double> priors);
// Variant that also charges the fully-valid outcome (adds n * prod p).
double expected_evals_total(std::span<const double> priors);

// Evaluation order minimizing expected_evals: ascending priors, stable.
std::vector<std::size_t> optimal_order(std::span<const double> priors);

// Upper bound on total model cost for K repair episodes when the existence
// event fires at probability threshold delta: each episode costs at most
// c_eval/(1-delta) expected evaluations plus c_rwr * b * L(delta) repair
// work, where L(delta) = log delta / log p_max bounds the unevaluated
// subpath length and b bounds the affected vertices per invalidation.
struct BoundParams {
  int episodes = 1;       // K
  int branching = 1;      // b
  double p_max = 0.5;     // largest edge prior, in (0,1)
  double delta = 0.5;     // existence threshold, in (0,1) (endpoints diverge)
  CostModel cost;
};
double theorem_bound(const BoundParams& p);

// L(delta) = log delta / log p_max.
double subpath_length_limit(double delta, double p_max);

// The delta minimizing theorem_bound over (0,1):
//   eta = (c_eval / (b * c_rwr)) * log(1/p_max) + 2,
//   delta* = (eta - sqrt(eta^2 - 4)) / 2,
// computed in the cancellation-free form 2 / (eta + sqrt(eta^2 - 4)).
double critical_delta(double c_eval, double c_rwr, int branching, double p_max);

// Adversarial family where an uninformed shortest-path event thrashes: a fan
// of l spokes from the source (only the last is valid) feeding two hubs that
// each connect to every vertex of an N-chain ending at the goal.  Every fan
// invalidation flips the cheapest hub, re-rooting the whole chain, so the
// shortest-path event pays Theta(N*l) rewires while a heuristic-progress
// event pays none.  Edges: 3N + 2l - 1; vertices: N + l + 3.
struct Counterexample {
  Graph graph;
  ExplicitWorld world;
  int source = 0;
  int target = 0;
  int chain = 0;  // N
  int fan = 0;    // l, even
};
Counterexample build_counterexample(int chain_n, int fan_l);

// Existence-threshold sweep on fixed worlds: per delta, medians of
// evaluations, rewires and model cost across feasible runs.
struct ParetoPoint {
  double delta = 0.0;
  double median_evals = 0.0;
  double median_rewires = 0.0;
  double median_cost = 0.0;
};
std::vector<ParetoPoint> pareto_sweep(const Graph& g,
                                      const std::vector<const World*>& worlds,
                                      int source, int target,
                                      std::span<const double> deltas,
                                      SelectorKind selector,
                                      const std::vector<double>& heuristic,
                                      const CostModel& cost,
                                      bool parallel = true);

// Small statistics helpers shared by the harness and the tests.
double median(std::vector<double> values);  // mean of middle two when even
struct ProportionalFit {
  double c = 0.0;   // least-squares slope through the origin
  double r2 = 0.0;  // 1 - SSE/SST
};
ProportionalFit fit_proportional(std::span<const double> x, std::span<const double> y);
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);
// Spearman rank correlation; p_value is the exact one-sided P(rho >= observed)
// under the permutation null (n <= 10 only, which the harness respects).
struct SpearmanResult {
  double rho = 0.0;
  double p_value = 1.0;
};
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

}  // namespace gls
