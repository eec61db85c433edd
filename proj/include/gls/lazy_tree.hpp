#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "gls/graph.hpp"

namespace gls {

class Event;

// One rewire = one settlement of a vertex whose parent differs from the
// parent recorded at its previous settlement.  A first settlement never
// counts.  Entries keep the settlement order so tests can ask *which*
// vertices churned, not just how many.
struct RewireLog {
  std::vector<int> entries;
  std::size_t total() const { return entries.size(); }
};

// What a walk of the tree chain source..leaf saw.  "dirty" marks a stale
// chain: it crosses an invalidated edge (or loops through vertices whose
// repair is still pending), which can only happen mid-repair; events never
// fire on such a chain.
struct SubpathStats {
  int unevaluated = 0;        // edges still Unknown on the chain
  double prior_product = 1.0; // product of priors over those Unknown edges
  int depth = 0;              // number of edges on the chain
  bool dirty = false;
};

// Outcome of offering a settlement candidate to an event.
enum class TriggerDecision { NoFire, Fire, DirtyBlocked };

// Incremental shortest-path tree over the lazy graph (all non-invalidated
// edges), repaired LPA*-style when an edge is invalidated instead of being
// rebuilt.  The frontier is keyed by f = min(g, rhs) + h with ties broken
// toward the larger min(g, rhs) and then the smaller vertex id; when several
// parents tie on rhs, the smaller parent id wins.  Edge statuses live in a
// per-run overlay, so the underlying Graph is shared and immutable.
class TreeState {
 public:
  // The heuristic must be consistent (zero, Euclidean on geometric graphs,
  // and full-graph distance-to-target all are).
  TreeState(const Graph& g, int source, int target, std::vector<double> heuristic);

  // Runs best-first extension until `event` fires, returning the leaf it
  // fired on; std::nullopt means the target is unreachable in the lazy graph.
  // The fired leaf is *not* settled.
  std::optional<int> extend(Event& event);

  // Tree chain from the source to `leaf` (pending parent for the leaf,
  // g-explaining parents above it).  Throws if the leaf was never reached.
  Path shortest_subpath(int leaf) const;

  // Chain bookkeeping for event rules; same walk as shortest_subpath.
  SubpathStats subpath_stats(int leaf) const;

  // Records an evaluation outcome in the overlay.  Invalid edges get weight
  // +inf in effect: both endpoints are re-relaxed and repair resumes on the
  // next extend().  Throws if the edge was already evaluated.
  void apply_evaluation(int edge_id, bool valid);

  EdgeStatus status(int edge_id) const;
  double g_value(int v) const { return g_.at(v); }
  double rhs_value(int v) const { return rhs_.at(v); }
  double heuristic(int v) const { return h_.at(v); }
  int parent(int v) const { return parent_.at(v); }
  const RewireLog& rewires() const { return rewires_; }
  const Graph& graph() const { return *graph_; }
  int source() const { return source_; }
  int target() const { return target_; }
  std::size_t settlements() const { return settlements_; }

  // Test/trace probe, called as (vertex, f, min(g,rhs)) at each settlement.
  std::function<void(int, double, double)> on_settle;

 private:
  struct QEntry {
    double f;
    double gt;  // min(g, rhs) at push time
    int v;
    std::uint32_t stamp;
    bool under;  // g < rhs at push time (stale cost-to-come pending retraction)
  };
  struct QAfter {
    bool operator()(const QEntry& a, const QEntry& b) const {
      if (a.f != b.f) return a.f > b.f;
      // When an underconsistent vertex ties with a vertex whose rhs cites its
      // stale g, the retraction has to happen first or the citation is bogus
      // and the fired chain is no longer lazily shortest.
      if (a.under != b.under) return !a.under;
      if (a.gt != b.gt) return a.gt < b.gt;  // larger min(g,rhs) first
      return a.v > b.v;
    }
  };

  struct WalkResult {
    SubpathStats stats;
    int stale_vertex = -1;  // inconsistent vertex to fix when dirty
  };

  void update_vertex(int v);
  void push_or_refresh(int v);
  void settle(int v);
  void retract(int v);  // underconsistent processing: g := inf, re-relax
  int chain_edge(int x, bool is_leaf) const;
  WalkResult walk_chain(int leaf) const;
  void eager_fix(int stale_vertex);

  const Graph* graph_ = nullptr;
  int source_ = -1;
  int target_ = -1;
  std::vector<double> h_;
  std::vector<double> g_, rhs_;
  std::vector<int> parent_, parent_edge_;
  std::vector<int> settled_parent_, settled_parent_edge_;
  std::vector<std::uint8_t> settled_once_;
  std::vector<EdgeStatus> overlay_;
  std::vector<std::uint32_t> stamp_;
  std::priority_queue<QEntry, std::vector<QEntry>, QAfter> queue_;
  RewireLog rewires_;
  std::size_t settlements_ = 0;
};

}  // namespace gls
