#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gls {

// Evaluation status of an edge.  Freshly built and freshly loaded graphs are
// entirely Unknown; per-run bookkeeping lives in the search tree's overlay so
// a Graph can be shared across runs unchanged.
enum class EdgeStatus : std::uint8_t { Unknown, Valid, Invalid };

struct VertexRecord {
  int id = -1;
  std::vector<double> position;
};

struct EdgeRecord {
  int id = -1;
  int u = -1;
  int v = -1;
  double weight = 0.0;  // > 0, finite
  double prior = 1.0;   // Bernoulli validity prior in [0, 1]
  EdgeStatus status = EdgeStatus::Unknown;
};

struct Path {
  std::vector<int> vertices;  // source..leaf order
  std::vector<int> edges;     // edges[i] joins vertices[i], vertices[i+1]
  double weight = 0.0;
};

// Undirected explicit graph, immutable once built.  Vertex and edge ids are
// dense 0-based indices.
class Graph {
 public:
  Graph() = default;
  // Validates everything (endpoint existence, positive finite weights,
  // priors in [0,1], uniform position dimension) and builds adjacency.
  Graph(std::vector<VertexRecord> vertices, std::vector<EdgeRecord> edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int dim() const { return dim_; }

  const VertexRecord& vertex(int id) const;
  const EdgeRecord& edge(int id) const;
  // Ids of edges incident to v, ascending.
  std::span<const int> incident(int v) const;
  // Endpoint of edge e opposite to vertex v.
  int opposite(int e, int v) const;

  // Copy of this graph with per-edge priors replaced (e.g. trained ones).
  Graph with_priors(const std::vector<double>& priors) const;

  double euclidean(int a, int b) const;

 private:
  std::vector<VertexRecord> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<int> incident_flat_;    // incident edge ids, grouped by vertex
  std::vector<int> incident_start_;   // per-vertex offsets into incident_flat_
  int dim_ = 0;
};

// d-dimensional low-discrepancy Halton point for the given index; one
// radical inverse per base.  Bases must be distinct primes.
std::vector<double> halton_point(std::uint64_t index, std::span<const int> bases);

// Random geometric graph: vertices at the given points, an edge wherever the
// Euclidean distance is <= radius (and positive), weight = distance,
// prior = 1, status Unknown.
Graph build_rgg(const std::vector<std::vector<double>>& points, double radius);

// Standard RGG connectivity radius gamma * (log n / n)^(1/d).
double default_connection_radius(int n, int d, double gamma = 2.0);

// Plain-text serialization:
//   gls-graph v1 d=<dim>
//   v <id> <x_1> ... <x_d>
//   e <id> <u> <v> <weight> <prior>
// Reals are written with 17 significant digits so load(save(g)) == g exactly.
void save_graph(const Graph& g, const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace gls
