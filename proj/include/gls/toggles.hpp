#pragma once

#include <optional>
#include <string>

#include "gls/graph.hpp"
#include "gls/lazy_tree.hpp"

namespace gls {

enum class EventKind { ShortestPath, ConstantDepth, HeuristicProgress, SubpathExistence };
enum class SelectorKind { Forward, Alternate, FailFast };

EventKind parse_event_kind(const std::string& tag);      // sp | cd | hp | se
std::string event_kind_tag(EventKind kind);
SelectorKind parse_selector_kind(const std::string& tag); // f | a | ff
std::string selector_kind_tag(SelectorKind kind);

// Decides where tree extension halts.  Every rule also fires when the leaf
// is the target, and never fires on a chain with no unevaluated edge unless
// the leaf is the target (so the selector always has work or the run is
// done). Chains that are mid-repair (crossing an invalidated edge) block the
// trigger instead of firing.
class Event {
 public:
  static Event shortest_path();
  static Event constant_depth(int alpha);          // alpha >= 1
  static Event heuristic_progress();
  static Event subpath_existence(double delta);    // 0 < delta <= 1

  EventKind kind() const { return kind_; }
  int alpha() const { return alpha_; }
  double delta() const { return delta_; }
  double h_min() const { return h_min_; }

  // Called by TreeState::extend for each settlement candidate.
  TriggerDecision examine(const TreeState& t, int v);

  // Called by the engine after every evaluation; child_vertex is the
  // evaluated edge's endpoint nearer the leaf on the chain it was picked
  // from.  Only HeuristicProgress keeps state (h_min, nonincreasing).
  void note_evaluation(const TreeState& t, int edge_id, int child_vertex);

 private:
  explicit Event(EventKind kind) : kind_(kind) {}
  EventKind kind_;
  int alpha_ = 0;
  double delta_ = 0.0;
  double h_min_;
};

// Picks which unevaluated edge of the chain to evaluate.  Forward: nearest
// the source.  Alternate: odd invocations nearest the source, even nearest
// the target.  FailFast: smallest prior, ties toward the source.
class Selector {
 public:
  static Selector forward() { return Selector(SelectorKind::Forward); }
  static Selector alternate() { return Selector(SelectorKind::Alternate); }
  static Selector fail_fast() { return Selector(SelectorKind::FailFast); }

  SelectorKind kind() const { return kind_; }
  int invocations() const { return invocations_; }

  // Returns the chosen edge id; exactly one counter increment per call.
  // Throws if the chain has no unevaluated edge.
  int select(const Path& subpath, const TreeState& t);

 private:
  explicit Selector(SelectorKind kind) : kind_(kind) {}
  SelectorKind kind_;
  int invocations_ = 0;
};

// Named toggle combinations from the literature.  "lazysp" admits a selector
// override; the other presets pin both toggles.
struct Preset {
  Event event;
  Selector selector;
};
Preset make_preset(const std::string& name, int alpha = 1, double delta = 0.5,
                   std::optional<SelectorKind> selector_override = std::nullopt);

}  // namespace gls
