#include "gls/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gls/io.hpp"

namespace gls {

Graph::Graph(std::vector<VertexRecord> vertices, std::vector<EdgeRecord> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  dim_ = n > 0 ? static_cast<int>(vertices_[0].position.size()) : 0;
  for (int i = 0; i < n; ++i) {
    if (vertices_[i].id != i)
      throw std::invalid_argument("vertex ids must be dense 0-based");
    if (static_cast<int>(vertices_[i].position.size()) != dim_)
      throw std::invalid_argument("inconsistent position dimension");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    EdgeRecord& e = edges_[i];
    if (e.id != static_cast<int>(i))
      throw std::invalid_argument("edge ids must be dense 0-based");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop edge");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight))
      throw std::invalid_argument("edge weight must be positive and finite");
    if (!(e.prior >= 0.0 && e.prior <= 1.0))
      throw std::invalid_argument("edge prior must be in [0,1]");
  }
  incident_start_.assign(n + 1, 0);
  for (const EdgeRecord& e : edges_) {
    ++incident_start_[e.u + 1];
    ++incident_start_[e.v + 1];
  }
  for (int v = 0; v < n; ++v) incident_start_[v + 1] += incident_start_[v];
  incident_flat_.resize(2 * edges_.size());
  std::vector<int> cursor(incident_start_.begin(), incident_start_.end() - 1);
  for (const EdgeRecord& e : edges_) {
    incident_flat_[cursor[e.u]++] = e.id;
    incident_flat_[cursor[e.v]++] = e.id;
  }
  // Edge ids are appended in ascending order per vertex already, but keep the
  // guarantee explicit.
  for (int v = 0; v < n; ++v) {
    std::sort(incident_flat_.begin() + incident_start_[v],
              incident_flat_.begin() + incident_start_[v + 1]);
  }
}

const VertexRecord& Graph::vertex(int id) const {
  if (id < 0 || id >= num_vertices()) throw std::out_of_range("vertex id");
  return vertices_[id];
}

const EdgeRecord& Graph::edge(int id) const {
  if (id < 0 || id >= num_edges()) throw std::out_of_range("edge id");
  return edges_[id];
}

std::span<const int> Graph::incident(int v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id");
  return {incident_flat_.data() + incident_start_[v],
          static_cast<std::size_t>(incident_start_[v + 1] - incident_start_[v])};
}

int Graph::opposite(int e, int v) const {
  const EdgeRecord& rec = edge(e);
  if (rec.u == v) return rec.v;
  if (rec.v == v) return rec.u;
  throw std::invalid_argument("vertex not an endpoint of edge");
}

Graph Graph::with_priors(const std::vector<double>& priors) const {
  if (priors.size() != edges_.size())
    throw std::invalid_argument("prior vector size mismatch");
  Graph g = *this;
  for (std::size_t i = 0; i < priors.size(); ++i) {
    if (!(priors[i] >= 0.0 && priors[i] <= 1.0))
      throw std::invalid_argument("edge prior must be in [0,1]");
    g.edges_[i].prior = priors[i];
  }
  return g;
}

double Graph::euclidean(int a, int b) const {
  const auto& pa = vertex(a).position;
  const auto& pb = vertex(b).position;
  double s = 0.0;
  for (int k = 0; k < dim_; ++k) {
    double d = pa[k] - pb[k];
    s += d * d;
  }
  return std::sqrt(s);
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

std::vector<double> halton_point(std::uint64_t index, std::span<const int> bases) {
  if (bases.empty()) throw std::invalid_argument("halton: no bases");
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (!is_prime(bases[i]))
      throw std::invalid_argument("halton: bases must be prime");
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (bases[i] == bases[j])
        throw std::invalid_argument("halton: bases must be distinct");
  }
  std::vector<double> point(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const std::uint64_t b = static_cast<std::uint64_t>(bases[k]);
    double r = 0.0;
    double f = 1.0 / static_cast<double>(b);
    for (std::uint64_t i = index; i > 0; i /= b) {
      r += static_cast<double>(i % b) * f;
      f /= static_cast<double>(b);
    }
    point[k] = r;
  }
  return point;
}

Graph build_rgg(const std::vector<std::vector<double>>& points, double radius) {
  if (points.empty()) throw std::invalid_argument("build_rgg: no points");
  if (!(radius > 0.0)) throw std::invalid_argument("build_rgg: radius must be > 0");
  const int n = static_cast<int>(points.size());
  const std::size_t d = points[0].size();
  std::vector<VertexRecord> vertices(n);
  for (int i = 0; i < n; ++i) {
    if (points[i].size() != d)
      throw std::invalid_argument("build_rgg: inconsistent point dimension");
    vertices[i] = {i, points[i]};
  }
  std::vector<EdgeRecord> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        double diff = points[i][k] - points[j][k];
        s += diff * diff;
      }
      double dist = std::sqrt(s);
      if (dist > 0.0 && dist <= radius) {
        EdgeRecord e;
        e.id = static_cast<int>(edges.size());
        e.u = i;
        e.v = j;
        e.weight = dist;
        e.prior = 1.0;
        edges.push_back(e);
      }
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

double default_connection_radius(int n, int d, double gamma) {
  if (n < 2 || d < 1 || !(gamma > 0.0))
    throw std::invalid_argument("default_connection_radius: bad arguments");
  return gamma * std::pow(std::log(static_cast<double>(n)) / n, 1.0 / d);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "gls-graph v1 d=" << g.dim() << "\n";
  for (int i = 0; i < g.num_vertices(); ++i) {
    out << "v " << i;
    for (double x : g.vertex(i).position) out << ' ' << format_double(x);
    out << "\n";
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    const EdgeRecord& e = g.edge(i);
    out << "e " << i << ' ' << e.u << ' ' << e.v << ' '
        << format_double(e.weight) << ' ' << format_double(e.prior) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  std::istringstream header(line);
  std::string magic, version, dtok;
  header >> magic >> version >> dtok;
  if (magic != "gls-graph" || version != "v1" || dtok.rfind("d=", 0) != 0)
    throw ParseError(path + ": bad header '" + line + "'");
  const int dim = static_cast<int>(parse_long(dtok.substr(2), path + " header"));
  if (dim < 1) throw ParseError(path + ": dimension must be >= 1");

  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "v") {
      VertexRecord v;
      std::string tok;
      if (!(ls >> tok)) throw ParseError(where + ": truncated vertex line");
      v.id = static_cast<int>(parse_long(tok, where));
      for (int k = 0; k < dim; ++k) {
        if (!(ls >> tok)) throw ParseError(where + ": truncated vertex line");
        v.position.push_back(parse_double(tok, where));
      }
      if (ls >> tok) throw ParseError(where + ": trailing tokens");
      if (v.id != static_cast<int>(vertices.size()))
        throw ParseError(where + ": vertex ids must be dense and ordered");
      vertices.push_back(std::move(v));
    } else if (kind == "e") {
      std::string tok[5];
      for (int k = 0; k < 5; ++k)
        if (!(ls >> tok[k])) throw ParseError(where + ": truncated edge line");
      std::string extra;
      if (ls >> extra) throw ParseError(where + ": trailing tokens");
      EdgeRecord e;
      e.id = static_cast<int>(parse_long(tok[0], where));
      e.u = static_cast<int>(parse_long(tok[1], where));
      e.v = static_cast<int>(parse_long(tok[2], where));
      e.weight = parse_double(tok[3], where);
      e.prior = parse_double(tok[4], where);
      if (e.id != static_cast<int>(edges.size()))
        throw ParseError(where + ": edge ids must be dense and ordered");
      if (e.u < 0 || e.u >= static_cast<int>(vertices.size()) || e.v < 0 ||
          e.v >= static_cast<int>(vertices.size()))
        throw ParseError(where + ": edge references unknown vertex");
      if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw ParseError(where + ": edge weight must be positive and finite");
      if (!(e.prior >= 0.0 && e.prior <= 1.0))
        throw ParseError(where + ": edge prior must be in [0,1]");
      edges.push_back(e);
    } else {
      throw ParseError(where + ": unknown directive '" + kind + "'");
    }
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace gls
