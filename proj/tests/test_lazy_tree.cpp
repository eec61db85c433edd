#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gls/analysis.hpp"
#include "gls/graph.hpp"
#include "gls/heuristic.hpp"
#include "gls/lazy_tree.hpp"
#include "gls/rng.hpp"
#include "gls/toggles.hpp"

using namespace gls;

namespace {

Graph make_graph(int n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<VertexRecord> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = {i, {0.0}};
  std::vector<EdgeRecord> es;
  for (const auto& [u, v, w] : edges) {
    EdgeRecord e;
    e.id = static_cast<int>(es.size());
    e.u = u;
    e.v = v;
    e.weight = w;
    es.push_back(e);
  }
  return Graph(std::move(vs), std::move(es));
}

}  // namespace

TEST_CASE("single-edge graph extends straight to the target") {
  Graph g = make_graph(2, {{0, 1, 1.0}});
  TreeState tree(g, 0, 1, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  auto leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  CHECK(*leaf == 1);
  Path p = tree.shortest_subpath(1);
  CHECK(p.vertices == std::vector<int>{0, 1});
  CHECK(p.edges == std::vector<int>{0});
  CHECK(p.weight == 1.0);
}

TEST_CASE("extension reports infeasibility when the lazy graph disconnects") {
  Graph g = make_graph(2, {{0, 1, 1.0}});
  TreeState tree(g, 0, 1, make_zero_heuristic(g));
  tree.apply_evaluation(0, false);
  Event sp = Event::shortest_path();
  CHECK_FALSE(tree.extend(sp).has_value());
}

TEST_CASE("equal-cost diamond resolves parents toward the smaller id") {
  // s=0, a=1, b=2, t=3; both routes cost 2 exactly (dyadic weights).
  Graph g = make_graph(4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}});
  TreeState tree(g, 0, 3, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  auto leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  Path p = tree.shortest_subpath(3);
  CHECK(p.vertices == std::vector<int>{0, 1, 3});  // via a, the smaller id
  CHECK(p.weight == 2.0);
}

TEST_CASE("subpath of the source itself is a single vertex") {
  Graph g = make_graph(2, {{0, 1, 1.0}});
  TreeState tree(g, 0, 1, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  tree.extend(sp);
  Path p = tree.shortest_subpath(0);
  CHECK(p.vertices == std::vector<int>{0});
  CHECK(p.edges.empty());
  CHECK(p.weight == 0.0);
}

TEST_CASE("unreached leaves are rejected") {
  Graph g = make_graph(3, {{0, 1, 1.0}});  // vertex 2 isolated
  TreeState tree(g, 0, 1, make_zero_heuristic(g));
  CHECK_THROWS_AS(tree.shortest_subpath(2), std::logic_error);
  CHECK_THROWS_AS(tree.subpath_stats(2), std::logic_error);
  CHECK_THROWS_AS(tree.shortest_subpath(5), std::out_of_range);
}

TEST_CASE("valid evaluations leave the tree untouched") {
  Graph g = make_graph(4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.5}, {2, 3, 1.5}});
  TreeState tree(g, 0, 3, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  auto leaf1 = tree.extend(sp);
  REQUIRE(leaf1.has_value());
  std::vector<double> g_before, rhs_before;
  for (int v = 0; v < 4; ++v) {
    g_before.push_back(tree.g_value(v));
    rhs_before.push_back(tree.rhs_value(v));
  }
  const std::size_t settled_before = tree.settlements();
  tree.apply_evaluation(0, true);
  auto leaf2 = tree.extend(sp);
  REQUIRE(leaf2.has_value());
  CHECK(*leaf2 == *leaf1);
  CHECK(tree.settlements() == settled_before);
  CHECK(tree.rewires().total() == 0);
  for (int v = 0; v < 4; ++v) {
    CHECK(tree.g_value(v) == g_before[v]);
    CHECK(tree.rhs_value(v) == rhs_before[v]);
  }
}

TEST_CASE("invalidating the tree edge reroutes and logs exactly one rewire") {
  // s=0, a=1, b=2, m=3, t=4: two routes to m, then one hop to t.
  Graph g = make_graph(5, {{0, 1, 1.0},    // 0: s-a
                           {1, 3, 1.0},    // 1: a-m
                           {0, 2, 1.5},    // 2: s-b
                           {2, 3, 1.5},    // 3: b-m
                           {3, 4, 1.0}});  // 4: m-t
  TreeState tree(g, 0, 4, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  auto leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  CHECK(tree.shortest_subpath(4).vertices == std::vector<int>{0, 1, 3, 4});
  CHECK(tree.rewires().total() == 0);  // nothing invalidated yet

  tree.apply_evaluation(1, false);  // kill a-m
  leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  Path p = tree.shortest_subpath(4);
  CHECK(p.vertices == std::vector<int>{0, 2, 3, 4});
  CHECK(p.weight == 4.0);
  // Only m settled again with a different parent (a -> b); t was never
  // settled (the event fires on it first) and a keeps its parent.
  CHECK(tree.rewires().entries == std::vector<int>{3});
}

TEST_CASE("double evaluation of an edge is an error") {
  Graph g = make_graph(2, {{0, 1, 1.0}});
  TreeState tree(g, 0, 1, make_zero_heuristic(g));
  tree.apply_evaluation(0, true);
  CHECK_THROWS_AS(tree.apply_evaluation(0, true), std::logic_error);
  CHECK_THROWS_AS(tree.apply_evaluation(0, false), std::logic_error);
  CHECK_THROWS_AS(tree.apply_evaluation(9, true), std::out_of_range);
}

TEST_CASE("fan flip on the adversarial family reroutes the whole chain") {
  // N=3 chain, l=2 fan.  After the first spoke is invalidated, repair
  // resettles every non-target chain vertex under the other hub, plus hub A
  // and the dead spoke itself; the target (c_3) fires pre-settlement and so
  // never appears in the log.  Ids: s=0, u1=1, u2=2, A=3, B=4, c1=5, c2=6,
  // c3=7 (target).
  Counterexample ce = build_counterexample(3, 2);
  TreeState tree(ce.graph, ce.source, ce.target,
                 make_zero_heuristic(ce.graph));
  Event sp = Event::shortest_path();
  auto leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  CHECK(*leaf == ce.target);
  CHECK(tree.rewires().total() == 0);

  tree.apply_evaluation(0, false);  // spoke s-u1 is invalid in this family
  leaf = tree.extend(sp);
  REQUIRE(leaf.has_value());
  CHECK(*leaf == ce.target);
  std::vector<int> rewired = tree.rewires().entries;
  std::sort(rewired.begin(), rewired.end());
  CHECK(rewired == std::vector<int>{1, 3, 5, 6});  // u1, A, c1, c2
  CHECK(std::find(rewired.begin(), rewired.end(), ce.target) == rewired.end());
}

TEST_CASE("graph-distance heuristic values and consistency") {
  // Chain of four vertices, unit weights.
  Graph g = make_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  auto h = graph_distance_heuristic(g, 3);
  CHECK(h[3] == 0.0);
  CHECK(h[0] == 3.0);
  CHECK(h[1] == 2.0);

  Graph iso = make_graph(3, {{0, 1, 1.0}});
  auto h2 = graph_distance_heuristic(iso, 1);
  CHECK(h2[2] == std::numeric_limits<double>::infinity());

  SplitMix64 rng(5);
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j)
      if (rng.uniform() < 0.1) edges.emplace_back(i, j, rng.uniform(0.1, 2.0));
  Graph rg = make_graph(40, edges);
  auto hr = graph_distance_heuristic(rg, 0);
  for (int e = 0; e < rg.num_edges(); ++e) {
    const EdgeRecord& rec = rg.edge(e);
    if (hr[rec.u] < 1e30)
      CHECK(hr[rec.u] <= hr[rec.v] + rec.weight + 1e-12);
    if (hr[rec.v] < 1e30)
      CHECK(hr[rec.v] <= hr[rec.u] + rec.weight + 1e-12);
  }
}

TEST_CASE("settlement keys are nondecreasing between invalidations") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::tuple<int, int, double>> edges;
    const int n = 30;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.12) edges.emplace_back(i, j, rng.uniform(0.1, 2.0));
    Graph g = make_graph(n, edges);
    const int target = n - 1;
    TreeState tree(g, 0, target, graph_distance_heuristic(g, target));
    std::vector<double> keys;
    tree.on_settle = [&](int, double f, double) { keys.push_back(f); };
    Event sp = Event::shortest_path();
    tree.extend(sp);
    for (std::size_t i = 1; i < keys.size(); ++i)
      CHECK(keys[i] >= keys[i - 1] - 1e-12);
  }
}

TEST_CASE("constant-depth trigger leaves exactly alpha unevaluated edges") {
  SplitMix64 rng(13);
  std::vector<std::tuple<int, int, double>> edges;
  const int n = 25;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < 0.15) edges.emplace_back(i, j, rng.uniform(0.1, 2.0));
  Graph g = make_graph(n, edges);
  TreeState tree(g, 0, n - 1, make_zero_heuristic(g));
  Event cd = Event::constant_depth(1);
  auto leaf = tree.extend(cd);
  if (leaf.has_value() && *leaf != n - 1)
    CHECK(tree.subpath_stats(*leaf).unevaluated == 1);
}

TEST_CASE("no invalidations means an empty rewire log") {
  SplitMix64 rng(17);
  std::vector<std::tuple<int, int, double>> edges;
  const int n = 30;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < 0.2) edges.emplace_back(i, j, rng.uniform(0.1, 2.0));
  Graph g = make_graph(n, edges);
  TreeState tree(g, 0, n - 1, make_zero_heuristic(g));
  Event sp = Event::shortest_path();
  auto leaf = tree.extend(sp);
  while (leaf.has_value()) {
    Path p = tree.shortest_subpath(*leaf);
    int next = -1;
    for (int e : p.edges)
      if (tree.status(e) == EdgeStatus::Unknown) {
        next = e;
        break;
      }
    if (next < 0) break;          // chain fully valid
    tree.apply_evaluation(next, true);  // everything is valid in this world
    leaf = tree.extend(sp);
  }
  CHECK(tree.rewires().total() == 0);
}

TEST_CASE("heuristic size mismatch is rejected") {
  Graph g = make_graph(2, {{0, 1, 1.0}});
  CHECK_THROWS_AS(TreeState(g, 0, 1, std::vector<double>{0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TreeState(g, 0, 5, make_zero_heuristic(g)),
                  std::out_of_range);
}
