#include "gls/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gls/heuristic.hpp"
#include "gls/parallel.hpp"

namespace gls {

namespace {

void check_priors(std::span<const double> priors) {
  for (double p : priors)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("priors must be in [0,1]");
}

}  // namespace

double expected_evals(std::span<const double> priors) {
  check_priors(priors);
  double sum = 0.0;
  double prefix = 1.0;  // prod of priors before position l
  for (std::size_t l = 0; l < priors.size(); ++l) {
    sum += prefix * (1.0 - priors[l]) * static_cast<double>(l + 1);
    prefix *= priors[l];
  }
  return sum;
}

double expected_evals_total(std::span<const double> priors) {
  double all_valid = 1.0;
  for (double p : priors) all_valid *= p;
  return expected_evals(priors) +
         all_valid * static_cast<double>(priors.size());
}

std::vector<std::size_t> optimal_order(std::span<const double> priors) {
  check_priors(priors);
  std::vector<std::size_t> order(priors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return priors[a] < priors[b]; });
  return order;
}

double subpath_length_limit(double delta, double p_max) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("subpath_length_limit: delta must be in (0,1)");
  if (!(p_max > 0.0 && p_max < 1.0))
    throw std::invalid_argument("subpath_length_limit: p_max must be in (0,1)");
  return std::log(delta) / std::log(p_max);
}

double theorem_bound(const BoundParams& p) {
  if (p.episodes < 1 || p.branching < 1)
    throw std::invalid_argument("theorem_bound: episodes and branching must be >= 1");
  if (!(p.cost.c_eval > 0.0 && p.cost.c_rwr > 0.0))
    throw std::invalid_argument("theorem_bound: costs must be positive");
  const double per_episode =
      p.cost.c_eval / (1.0 - p.delta) +
      p.cost.c_rwr * p.branching * subpath_length_limit(p.delta, p.p_max);
  return p.episodes * per_episode;
}

double critical_delta(double c_eval, double c_rwr, int branching, double p_max) {
  if (!(c_eval > 0.0 && c_rwr > 0.0))
    throw std::invalid_argument("critical_delta: costs must be positive");
  if (branching < 1)
    throw std::invalid_argument("critical_delta: branching must be >= 1");
  if (!(p_max > 0.0 && p_max < 1.0))
    throw std::invalid_argument("critical_delta: p_max must be in (0,1)");
  const double eta =
      (c_eval / (branching * c_rwr)) * std::log(1.0 / p_max) + 2.0;
  return 2.0 / (eta + std::sqrt(eta * eta - 4.0));
}

Counterexample build_counterexample(int chain_n, int fan_l) {
  if (chain_n < 1) throw std::invalid_argument("build_counterexample: chain must be >= 1");
  if (fan_l < 2 || fan_l % 2 != 0)
    throw std::invalid_argument("build_counterexample: fan must be even and >= 2");
  const int n = chain_n, l = fan_l;
  // Vertex ids: source 0, spokes u_i = i (1..l), hubs A = l+1 and B = l+2,
  // chain c_j = l+2+j (1..n); the goal is c_n.
  const int hub_a = l + 1, hub_b = l + 2;
  auto chain_vertex = [&](int j) { return l + 2 + j; };
  std::vector<VertexRecord> vertices(n + l + 3);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    vertices[i] = {static_cast<int>(i), {0.0}};
  std::vector<EdgeRecord> edges;
  std::vector<std::uint8_t> valid;
  auto add_edge = [&](int u, int v, double w, bool ok) {
    EdgeRecord e;
    e.id = static_cast<int>(edges.size());
    e.u = u;
    e.v = v;
    e.weight = w;
    edges.push_back(e);
    valid.push_back(ok ? 1 : 0);
  };
  // Spokes: strictly increasing weights so the search prefers them in order;
  // only the last one is actually valid.
  for (int i = 1; i <= l; ++i)
    add_edge(0, i, 1.0 + i * 1e-3, /*ok=*/i == l);
  // Odd spokes feed hub A, even spokes hub B.
  for (int i = 1; i <= l; ++i)
    add_edge(i, i % 2 == 1 ? hub_a : hub_b, 1.0, true);
  // Both hubs reach every chain vertex directly, at matching weights, so the
  // cheapest route to the whole chain flips hubs on every spoke flip.
  for (int j = 1; j <= n; ++j) add_edge(hub_a, chain_vertex(j), static_cast<double>(j), true);
  for (int j = 1; j <= n; ++j) add_edge(hub_b, chain_vertex(j), static_cast<double>(j), true);
  // Chain links are just expensive enough that hub shortcuts win.
  for (int j = 1; j < n; ++j) add_edge(chain_vertex(j), chain_vertex(j + 1), 1.5, true);

  Counterexample ce{Graph(std::move(vertices), std::move(edges)),
                    ExplicitWorld(std::move(valid)),
                    0,
                    chain_vertex(n),
                    n,
                    l};
  return ce;
}

std::vector<ParetoPoint> pareto_sweep(const Graph& g,
                                      const std::vector<const World*>& worlds,
                                      int source, int target,
                                      std::span<const double> deltas,
                                      SelectorKind selector,
                                      const std::vector<double>& heuristic,
                                      const CostModel& cost, bool parallel) {
  if (worlds.empty()) throw std::invalid_argument("pareto_sweep: no worlds");
  if (deltas.empty()) throw std::invalid_argument("pareto_sweep: no deltas");
  struct Cell {
    double evals = 0.0, rewires = 0.0, cost = 0.0;
    bool feasible = false;
  };
  const std::size_t w = worlds.size();
  std::vector<Cell> cells(deltas.size() * w);
  parallel_for(cells.size(), parallel, [&](std::size_t idx) {
    const double delta = deltas[idx / w];
    const World& world = *worlds[idx % w];
    Event event = Event::subpath_existence(delta);
    Selector sel = selector == SelectorKind::Forward    ? Selector::forward()
                   : selector == SelectorKind::Alternate ? Selector::alternate()
                                                         : Selector::fail_fast();
    RunResult r = gls_run(g, world, source, target, event, sel, heuristic);
    Cell& c = cells[idx];
    c.feasible = r.path.has_value();
    c.evals = static_cast<double>(r.evaluated.size());
    c.rewires = static_cast<double>(r.rewires.total());
    c.cost = cost_total(r, cost);
  });
  std::vector<ParetoPoint> points;
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    std::vector<double> evals, rewires, costs;
    for (std::size_t i = 0; i < w; ++i) {
      const Cell& c = cells[d * w + i];
      if (!c.feasible) continue;
      evals.push_back(c.evals);
      rewires.push_back(c.rewires);
      costs.push_back(c.cost);
    }
    ParetoPoint p;
    p.delta = deltas[d];
    p.median_evals = median(evals);
    p.median_rewires = median(rewires);
    p.median_cost = median(costs);
    points.push_back(p);
  }
  return points;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ProportionalFit fit_proportional(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty())
    throw std::invalid_argument("fit_proportional: bad input sizes");
  double sxx = 0.0, sxy = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    sy += y[i];
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_proportional: degenerate x");
  ProportionalFit fit;
  fit.c = sxy / sxx;
  const double ybar = sy / y.size();
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.c * x[i];
    sse += r * r;
    const double d = y[i] - ybar;
    sst += d * d;
  }
  fit.r2 = sst > 0.0 ? 1.0 - sse / sst : (sse == 0.0 ? 1.0 : 0.0);
  return fit;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_linear: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_linear: degenerate x");
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double sse = 0.0, sst = 0.0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    sse += r * r;
    const double d = y[i] - ybar;
    sst += d * d;
  }
  fit.r2 = sst > 0.0 ? 1.0 - sse / sst : (sse == 0.0 ? 1.0 : 0.0);
  return fit;
}

namespace {

std::vector<double> ranks_of(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

SpearmanResult spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::invalid_argument("spearman: need >= 3 paired samples");
  if (x.size() > 10)
    throw std::invalid_argument("spearman: exact permutation p limited to n <= 10");
  const std::vector<double> rx = ranks_of(x);
  const std::vector<double> ry = ranks_of(y);
  SpearmanResult res;
  res.rho = pearson(rx, ry);
  std::vector<double> perm = ry;
  std::sort(perm.begin(), perm.end());
  std::size_t count = 0, total = 0;
  do {
    ++total;
    if (pearson(rx, perm) >= res.rho - 1e-12) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.p_value = static_cast<double>(count) / static_cast<double>(total);
  return res;
}

}  // namespace gls
