#include "gls/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gls {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra over the subgraph of edges for which `usable` is true.
std::optional<Path> dijkstra_subgraph(const Graph& g, int source, int target,
                                      const std::function<bool(int)>& usable) {
  std::vector<double> dist(g.num_vertices(), kInf);
  std::vector<int> parent(g.num_vertices(), -1);
  std::vector<int> parent_edge(g.num_vertices(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[source] = 0.0;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    if (v == target) break;
    for (int e : g.incident(v)) {
      if (!usable(e)) continue;
      const int u = g.opposite(e, v);
      const double nd = d + g.edge(e).weight;
      if (nd < dist[u]) {
        dist[u] = nd;
        parent[u] = v;
        parent_edge[u] = e;
        pq.emplace(nd, u);
      }
    }
  }
  if (dist[target] >= kInf) return std::nullopt;
  Path p;
  p.weight = dist[target];
  for (int v = target; v != source; v = parent[v]) {
    p.vertices.push_back(v);
    p.edges.push_back(parent_edge[v]);
  }
  p.vertices.push_back(source);
  std::reverse(p.vertices.begin(), p.vertices.end());
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

}  // namespace

double cost_total(const RunResult& r, const CostModel& m) {
  return cost_total(m, r.evaluated.size(), r.rewires.total());
}

double cost_total(const CostModel& m, std::size_t evaluations,
                  std::size_t rewires) {
  return m.c_eval * static_cast<double>(evaluations) +
         m.c_rwr * static_cast<double>(rewires);
}

RunResult gls_run(const Graph& g, const World& world, int source, int target,
                  Event event, Selector selector,
                  const std::vector<double>& heuristic, const TraceHook& trace) {
  const auto t0 = std::chrono::steady_clock::now();
  TreeState tree(g, source, target, heuristic);
  RunResult result;
  for (;;) {
    std::optional<int> leaf = tree.extend(event);
    if (!leaf) break;  // lazy graph disconnected: infeasible
    Path chain = tree.shortest_subpath(*leaf);
    if (*leaf == target) {
      const bool all_valid =
          std::all_of(chain.edges.begin(), chain.edges.end(), [&](int e) {
            return tree.status(e) == EdgeStatus::Valid;
          });
      if (all_valid) {
        result.path = std::move(chain);
        break;
      }
    }
    ++result.iterations;
    // Capture the leaf key before the evaluation can revoke it.
    const double leaf_f =
        std::min(tree.g_value(*leaf), tree.rhs_value(*leaf)) +
        tree.heuristic(*leaf);
    const int edge = selector.select(chain, tree);
    const bool valid = world.evaluate(g, edge);
    result.evaluated.push_back({edge, valid});
    tree.apply_evaluation(edge, valid);
    // The chain lists edges source->leaf; the evaluated edge's child is the
    // endpoint farther along the chain.
    int child = -1;
    for (std::size_t i = 0; i < chain.edges.size(); ++i) {
      if (chain.edges[i] == edge) {
        child = chain.vertices[i + 1];
        break;
      }
    }
    if (child < 0) throw std::logic_error("gls_run: selector left the chain");
    event.note_evaluation(tree, edge, child);
    if (trace) {
      IterationTrace t;
      t.iteration = result.iterations;
      t.leaf = *leaf;
      t.leaf_f = leaf_f;
      t.edge = edge;
      t.valid = valid;
      t.rewires = tree.rewires().total();
      trace(t);
    }
  }
  result.rewires = tree.rewires();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::optional<Path> oracle_shortest(const Graph& g, const World& world,
                                    int source, int target) {
  std::vector<std::uint8_t> valid = evaluate_all(g, world, /*parallel=*/false);
  return dijkstra_subgraph(g, source, target,
                           [&](int e) { return valid[e] != 0; });
}

bool verify_certificate(const Graph& g, int source, int target,
                        const RunResult& r) {
  std::vector<int> outcome(g.num_edges(), -1);  // -1 unknown, 0 invalid, 1 valid
  for (const EvalRecord& rec : r.evaluated) {
    if (rec.edge < 0 || rec.edge >= g.num_edges()) return false;
    if (outcome[rec.edge] != -1) return false;  // double evaluation
    outcome[rec.edge] = rec.valid ? 1 : 0;
  }
  // Best path that survives the recorded invalidations; unevaluated edges
  // count as usable (that is what "lazily shortest" means).
  std::optional<Path> best = dijkstra_subgraph(
      g, source, target, [&](int e) { return outcome[e] != 0; });
  if (!r.path) return !best.has_value();
  const Path& p = *r.path;
  if (p.vertices.empty() || p.vertices.front() != source ||
      p.vertices.back() != target)
    return false;
  if (p.edges.size() + 1 != p.vertices.size()) return false;
  double weight = 0.0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const int e = p.edges[i];
    if (e < 0 || e >= g.num_edges()) return false;
    if (outcome[e] != 1) return false;  // path edge not evaluated valid
    const EdgeRecord& rec = g.edge(e);
    const int a = p.vertices[i], b = p.vertices[i + 1];
    if (!((rec.u == a && rec.v == b) || (rec.u == b && rec.v == a))) return false;
    weight += rec.weight;
  }
  if (std::abs(weight - p.weight) > 1e-9) return false;
  return best && best->weight >= p.weight - 1e-9;
}

}  // namespace gls
