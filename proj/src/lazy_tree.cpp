#include "gls/lazy_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gls/toggles.hpp"

namespace gls {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TreeState::TreeState(const Graph& g, int source, int target,
                     std::vector<double> heuristic)
    : graph_(&g), source_(source), target_(target), h_(std::move(heuristic)) {
  const int n = g.num_vertices();
  if (source < 0 || source >= n || target < 0 || target >= n)
    throw std::out_of_range("TreeState: source/target out of range");
  if (static_cast<int>(h_.size()) != n)
    throw std::invalid_argument("TreeState: heuristic size mismatch");
  g_.assign(n, kInf);
  rhs_.assign(n, kInf);
  parent_.assign(n, -1);
  parent_edge_.assign(n, -1);
  settled_parent_.assign(n, -1);
  settled_parent_edge_.assign(n, -1);
  settled_once_.assign(n, 0);
  overlay_.assign(g.num_edges(), EdgeStatus::Unknown);
  stamp_.assign(n, 0);
  rhs_[source_] = 0.0;
  push_or_refresh(source_);
}

EdgeStatus TreeState::status(int edge_id) const {
  if (edge_id < 0 || edge_id >= graph_->num_edges())
    throw std::out_of_range("TreeState: edge id");
  return overlay_[edge_id];
}

void TreeState::push_or_refresh(int v) {
  ++stamp_[v];  // invalidates any queued entries for v
  if (g_[v] != rhs_[v]) {
    const double gt = std::min(g_[v], rhs_[v]);
    queue_.push(QEntry{gt + h_[v], gt, v, stamp_[v], g_[v] < rhs_[v]});
  }
}

void TreeState::update_vertex(int v) {
  if (v == source_) return;  // rhs(source) is pinned to 0
  double best = kInf;
  int best_parent = -1, best_edge = -1;
  for (int e : graph_->incident(v)) {
    if (overlay_[e] == EdgeStatus::Invalid) continue;
    const int u = graph_->opposite(e, v);
    const double cand = g_[u] + graph_->edge(e).weight;
    if (cand < best || (cand == best && cand < kInf && u < best_parent)) {
      best = cand;
      best_parent = u;
      best_edge = e;
    }
  }
  rhs_[v] = best;
  parent_[v] = best_parent;
  parent_edge_[v] = best_edge;
  push_or_refresh(v);
}

void TreeState::settle(int v) {
  g_[v] = rhs_[v];
  ++stamp_[v];
  ++settlements_;
  if (settled_once_[v] && settled_parent_[v] != parent_[v])
    rewires_.entries.push_back(v);
  settled_once_[v] = 1;
  settled_parent_[v] = parent_[v];
  settled_parent_edge_[v] = parent_edge_[v];
  if (on_settle) on_settle(v, g_[v] + h_[v], g_[v]);
  for (int e : graph_->incident(v)) {
    if (overlay_[e] == EdgeStatus::Invalid) continue;
    update_vertex(graph_->opposite(e, v));
  }
}

void TreeState::retract(int v) {
  g_[v] = kInf;
  update_vertex(v);
  for (int e : graph_->incident(v)) {
    if (overlay_[e] == EdgeStatus::Invalid) continue;
    update_vertex(graph_->opposite(e, v));
  }
}

int TreeState::chain_edge(int x, bool is_leaf) const {
  // The leaf's chain edge explains rhs(leaf) (the pending parent); above it,
  // a consistent vertex's current parent explains g == rhs, while an
  // inconsistent vertex's g is only explained by its last settled parent.
  if (is_leaf || g_[x] == rhs_[x]) return parent_edge_[x];
  return settled_parent_edge_[x];
}

TreeState::WalkResult TreeState::walk_chain(int leaf) const {
  WalkResult r;
  const int n = graph_->num_vertices();
  int x = leaf;
  bool is_leaf = true;
  int citing_child = -1;  // last vertex crossed via its settled-parent edge
  while (x != source_) {
    if (!is_leaf && !(g_[x] < kInf)) {
      // x's settlement was revoked (g = inf), so it cannot carry a chain;
      // the child still citing the dead settlement is the stale one.  Fixing
      // the child (finite g -> inf) shrinks the stale set, so repair
      // terminates; fixing x again would be a no-op.
      if (citing_child < 0)
        throw std::logic_error("TreeState: revoked vertex on a live chain");
      r.stats.dirty = true;
      r.stale_vertex = citing_child;
      return r;
    }
    const int e = chain_edge(x, is_leaf);
    if (e < 0) {  // the leaf lost its pending parent: re-relax it
      r.stats.dirty = true;
      r.stale_vertex = x;
      return r;
    }
    if (overlay_[e] == EdgeStatus::Invalid) {
      r.stats.dirty = true;
      r.stale_vertex = x;  // its recorded parent edge just died
      return r;
    }
    if (overlay_[e] == EdgeStatus::Unknown) {
      ++r.stats.unevaluated;
      r.stats.prior_product *= graph_->edge(e).prior;
    }
    ++r.stats.depth;
    if (r.stats.depth > n) {
      // Stale settled-parent records can form a cycle.  Every vertex on it
      // has finite g (infinite ones dirty the walk above) and at least one
      // is inconsistent (consistent links strictly increase g), so fixing
      // the first such vertex always makes progress.
      int y = leaf;
      bool yl = true;
      for (int steps = 0; steps <= n + 1; ++steps) {
        if (y == source_) break;
        if (g_[y] != rhs_[y] && g_[y] < kInf) {
          r.stats.dirty = true;
          r.stale_vertex = y;
          return r;
        }
        const int ee = chain_edge(y, yl);
        if (ee < 0 || overlay_[ee] == EdgeStatus::Invalid) break;
        y = graph_->opposite(ee, y);
        yl = false;
      }
      throw std::logic_error("TreeState: corrupt tree chain");
    }
    if (!is_leaf && g_[x] != rhs_[x]) citing_child = x;
    x = graph_->opposite(e, x);
    is_leaf = false;
  }
  return r;
}

SubpathStats TreeState::subpath_stats(int leaf) const {
  if (leaf < 0 || leaf >= graph_->num_vertices())
    throw std::out_of_range("TreeState: leaf out of range");
  if (std::min(g_[leaf], rhs_[leaf]) >= kInf)
    throw std::logic_error("TreeState: leaf not reached");
  return walk_chain(leaf).stats;
}

Path TreeState::shortest_subpath(int leaf) const {
  if (leaf < 0 || leaf >= graph_->num_vertices())
    throw std::out_of_range("TreeState: leaf out of range");
  if (std::min(g_[leaf], rhs_[leaf]) >= kInf)
    throw std::logic_error("TreeState: leaf not reached");
  WalkResult probe = walk_chain(leaf);
  if (probe.stats.dirty)
    throw std::logic_error("TreeState: chain is stale (repair pending)");
  Path path;
  path.vertices.push_back(leaf);
  int x = leaf;
  bool is_leaf = true;
  while (x != source_) {
    const int e = chain_edge(x, is_leaf);
    path.edges.push_back(e);
    path.weight += graph_->edge(e).weight;
    x = graph_->opposite(e, x);
    path.vertices.push_back(x);
    is_leaf = false;
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

void TreeState::eager_fix(int stale_vertex) {
  // Out-of-order underconsistent processing: setting g to +inf is always
  // conservative, it just forces the vertex (and dependents) to re-relax.
  g_[stale_vertex] = kInf;
  update_vertex(stale_vertex);
  for (int e : graph_->incident(stale_vertex)) {
    if (overlay_[e] == EdgeStatus::Invalid) continue;
    update_vertex(graph_->opposite(e, stale_vertex));
  }
}

std::optional<int> TreeState::extend(Event& event) {
  for (;;) {
    while (!queue_.empty() && queue_.top().stamp != stamp_[queue_.top().v])
      queue_.pop();
    if (queue_.empty()) return std::nullopt;
    const QEntry top = queue_.top();
    const int v = top.v;
    if (!(top.f < kInf)) return std::nullopt;  // only unreachable work left
    if (g_[v] > rhs_[v]) {
      // Settlement candidate: the event may halt extension here.  The leaf
      // stays unsettled so the next extend() offers it again.
      switch (event.examine(*this, v)) {
        case TriggerDecision::Fire:
          return v;
        case TriggerDecision::DirtyBlocked: {
          WalkResult r = walk_chain(v);
          if (r.stale_vertex < 0)
            throw std::logic_error("TreeState: dirty chain without stale vertex");
          eager_fix(r.stale_vertex);
          continue;
        }
        case TriggerDecision::NoFire:
          break;
      }
      queue_.pop();
      settle(v);
    } else {
      queue_.pop();
      retract(v);
    }
  }
}

void TreeState::apply_evaluation(int edge_id, bool valid) {
  if (edge_id < 0 || edge_id >= graph_->num_edges())
    throw std::out_of_range("TreeState: edge id");
  if (overlay_[edge_id] != EdgeStatus::Unknown)
    throw std::logic_error("TreeState: edge evaluated twice");
  overlay_[edge_id] = valid ? EdgeStatus::Valid : EdgeStatus::Invalid;
  if (!valid) {
    const EdgeRecord& e = graph_->edge(edge_id);
    update_vertex(e.u);
    update_vertex(e.v);
  }
}

}  // namespace gls
