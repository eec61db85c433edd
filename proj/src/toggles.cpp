#include "gls/toggles.hpp"

#include <limits>
#include <stdexcept>

namespace gls {

EventKind parse_event_kind(const std::string& tag) {
  if (tag == "sp") return EventKind::ShortestPath;
  if (tag == "cd") return EventKind::ConstantDepth;
  if (tag == "hp") return EventKind::HeuristicProgress;
  if (tag == "se") return EventKind::SubpathExistence;
  throw std::invalid_argument("unknown event tag '" + tag + "'");
}

std::string event_kind_tag(EventKind kind) {
  switch (kind) {
    case EventKind::ShortestPath: return "sp";
    case EventKind::ConstantDepth: return "cd";
    case EventKind::HeuristicProgress: return "hp";
    case EventKind::SubpathExistence: return "se";
  }
  throw std::logic_error("bad EventKind");
}

SelectorKind parse_selector_kind(const std::string& tag) {
  if (tag == "f") return SelectorKind::Forward;
  if (tag == "a") return SelectorKind::Alternate;
  if (tag == "ff") return SelectorKind::FailFast;
  throw std::invalid_argument("unknown selector tag '" + tag + "'");
}

std::string selector_kind_tag(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::Forward: return "f";
    case SelectorKind::Alternate: return "a";
    case SelectorKind::FailFast: return "ff";
  }
  throw std::logic_error("bad SelectorKind");
}

Event Event::shortest_path() { return Event(EventKind::ShortestPath); }

Event Event::constant_depth(int alpha) {
  if (alpha < 1) throw std::invalid_argument("constant_depth: alpha must be >= 1");
  Event e(EventKind::ConstantDepth);
  e.alpha_ = alpha;
  return e;
}

Event Event::heuristic_progress() {
  Event e(EventKind::HeuristicProgress);
  e.h_min_ = std::numeric_limits<double>::infinity();
  return e;
}

Event Event::subpath_existence(double delta) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("subpath_existence: delta must be in (0,1]");
  Event e(EventKind::SubpathExistence);
  e.delta_ = delta;
  return e;
}

TriggerDecision Event::examine(const TreeState& t, int v) {
  const bool at_target = (v == t.target());
  // Cheap pre-checks that need no chain walk.
  if (kind_ == EventKind::ShortestPath && !at_target) return TriggerDecision::NoFire;
  if (kind_ == EventKind::HeuristicProgress && !at_target &&
      !(t.heuristic(v) < h_min_))
    return TriggerDecision::NoFire;

  const SubpathStats stats = t.subpath_stats(v);
  if (stats.dirty) {
    // Mid-repair chain: whether or not the rule holds, firing here could
    // hand the engine a dead path, so ask extend() to fix the chain first.
    bool would_fire = at_target;
    switch (kind_) {
      case EventKind::ShortestPath: break;
      case EventKind::ConstantDepth:
        would_fire = would_fire || stats.unevaluated == alpha_;
        break;
      case EventKind::HeuristicProgress:
        would_fire = would_fire || stats.unevaluated >= 1;
        break;
      case EventKind::SubpathExistence:
        would_fire = would_fire ||
                     (stats.unevaluated >= 1 && stats.prior_product <= delta_);
        break;
    }
    return would_fire ? TriggerDecision::DirtyBlocked : TriggerDecision::NoFire;
  }
  if (at_target) return TriggerDecision::Fire;
  switch (kind_) {
    case EventKind::ShortestPath:
      return TriggerDecision::NoFire;
    case EventKind::ConstantDepth:
      return stats.unevaluated == alpha_ ? TriggerDecision::Fire
                                         : TriggerDecision::NoFire;
    case EventKind::HeuristicProgress:
      return stats.unevaluated >= 1 ? TriggerDecision::Fire
                                    : TriggerDecision::NoFire;
    case EventKind::SubpathExistence:
      return (stats.unevaluated >= 1 && stats.prior_product <= delta_)
                 ? TriggerDecision::Fire
                 : TriggerDecision::NoFire;
  }
  throw std::logic_error("bad EventKind");
}

void Event::note_evaluation(const TreeState& t, int edge_id, int child_vertex) {
  (void)edge_id;
  if (kind_ != EventKind::HeuristicProgress) return;
  const double h = t.heuristic(child_vertex);
  if (h < h_min_) h_min_ = h;
}

int Selector::select(const Path& subpath, const TreeState& t) {
  ++invocations_;
  int first = -1, last = -1, best = -1;
  double best_prior = 2.0;
  for (int e : subpath.edges) {
    if (t.status(e) != EdgeStatus::Unknown) continue;
    if (first < 0) first = e;
    last = e;
    const double p = t.graph().edge(e).prior;
    if (p < best_prior) {  // strict: ties keep the earlier (source-side) edge
      best_prior = p;
      best = e;
    }
  }
  if (first < 0) throw std::logic_error("Selector: no unevaluated edge on chain");
  switch (kind_) {
    case SelectorKind::Forward: return first;
    case SelectorKind::Alternate: return invocations_ % 2 == 1 ? first : last;
    case SelectorKind::FailFast: return best;
  }
  throw std::logic_error("bad SelectorKind");
}

Preset make_preset(const std::string& name, int alpha, double delta,
                   std::optional<SelectorKind> selector_override) {
  auto pick = [&](SelectorKind fixed) {
    if (selector_override && *selector_override != fixed)
      throw std::invalid_argument("preset '" + name + "' pins its selector");
    switch (fixed) {
      case SelectorKind::Forward: return Selector::forward();
      case SelectorKind::Alternate: return Selector::alternate();
      case SelectorKind::FailFast: return Selector::fail_fast();
    }
    throw std::logic_error("bad SelectorKind");
  };
  if (name == "lazysp") {
    SelectorKind s = selector_override.value_or(SelectorKind::Forward);
    switch (s) {
      case SelectorKind::Forward: return {Event::shortest_path(), Selector::forward()};
      case SelectorKind::Alternate: return {Event::shortest_path(), Selector::alternate()};
      case SelectorKind::FailFast: return {Event::shortest_path(), Selector::fail_fast()};
    }
  }
  if (name == "lwa") return {Event::constant_depth(1), pick(SelectorKind::Forward)};
  if (name == "lra") return {Event::constant_depth(alpha), pick(SelectorKind::Forward)};
  if (name == "gls-se")
    return {Event::subpath_existence(delta), pick(SelectorKind::FailFast)};
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace gls
