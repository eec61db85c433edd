#pragma once

#include <string>
#include <vector>

#include "gls/graph.hpp"

namespace gls {

enum class HeuristicKind { Zero, Euclidean, GraphDistance };

HeuristicKind parse_heuristic_kind(const std::string& name);
std::string heuristic_kind_name(HeuristicKind kind);

// Heuristics are materialized as one value per vertex.  All three are
// consistent for their intended graphs: Zero always; Euclidean when edge
// weights are the endpoint distances (geometric graphs); GraphDistance (the
// exact distance-to-target over the full graph, ignoring validity) always —
// it is the tightest admissible choice and stays admissible after edges are
// invalidated, since removing edges can only lengthen true distances.
std::vector<double> make_zero_heuristic(const Graph& g);
std::vector<double> make_euclidean_heuristic(const Graph& g, int target);
std::vector<double> graph_distance_heuristic(const Graph& g, int target);

std::vector<double> make_heuristic(HeuristicKind kind, const Graph& g, int target);

}  // namespace gls
