#include "gls/heuristic.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace gls {

HeuristicKind parse_heuristic_kind(const std::string& name) {
  if (name == "zero") return HeuristicKind::Zero;
  if (name == "euclid") return HeuristicKind::Euclidean;
  if (name == "graph") return HeuristicKind::GraphDistance;
  throw std::invalid_argument("unknown heuristic '" + name + "'");
}

std::string heuristic_kind_name(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::Zero: return "zero";
    case HeuristicKind::Euclidean: return "euclid";
    case HeuristicKind::GraphDistance: return "graph";
  }
  throw std::logic_error("bad HeuristicKind");
}

std::vector<double> make_zero_heuristic(const Graph& g) {
  return std::vector<double>(g.num_vertices(), 0.0);
}

std::vector<double> make_euclidean_heuristic(const Graph& g, int target) {
  std::vector<double> h(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) h[v] = g.euclidean(v, target);
  return h;
}

std::vector<double> graph_distance_heuristic(const Graph& g, int target) {
  if (target < 0 || target >= g.num_vertices())
    throw std::out_of_range("graph_distance_heuristic: bad target");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.num_vertices(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[target] = 0.0;
  pq.emplace(0.0, target);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (int e : g.incident(v)) {
      int u = g.opposite(e, v);
      double nd = d + g.edge(e).weight;
      if (nd < dist[u]) {
        dist[u] = nd;
        pq.emplace(nd, u);
      }
    }
  }
  return dist;  // unreachable vertices keep +inf
}

std::vector<double> make_heuristic(HeuristicKind kind, const Graph& g, int target) {
  switch (kind) {
    case HeuristicKind::Zero: return make_zero_heuristic(g);
    case HeuristicKind::Euclidean: return make_euclidean_heuristic(g, target);
    case HeuristicKind::GraphDistance: return graph_distance_heuristic(g, target);
  }
  throw std::logic_error("bad HeuristicKind");
}

}  // namespace gls
