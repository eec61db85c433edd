#include "gls/world.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gls/io.hpp"
#include "gls/parallel.hpp"
#include "gls/rng.hpp"

namespace gls {

bool ExplicitWorld::evaluate(const Graph& g, int edge_id) const {
  if (edge_id < 0 || edge_id >= g.num_edges() ||
      edge_id >= static_cast<int>(valid_.size()))
    throw std::out_of_range("ExplicitWorld: unknown edge id");
  return valid_[edge_id] != 0;
}

BitmapWorld::BitmapWorld(int rows, int cols, std::vector<std::uint8_t> occupied)
    : rows_(rows), cols_(cols), occupied_(std::move(occupied)) {
  if (rows_ < 16 || cols_ < 16)
    throw std::invalid_argument("BitmapWorld: resolution must be >= 16");
  if (occupied_.size() != static_cast<std::size_t>(rows_) * cols_)
    throw std::invalid_argument("BitmapWorld: grid size mismatch");
}

bool BitmapWorld::occupied(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("BitmapWorld: cell out of range");
  return occupied_[static_cast<std::size_t>(row) * cols_ + col] != 0;
}

bool BitmapWorld::point_occupied(double x, double y) const {
  int col = std::clamp(static_cast<int>(x * cols_), 0, cols_ - 1);
  int row = std::clamp(static_cast<int>(y * rows_), 0, rows_ - 1);
  return occupied_[static_cast<std::size_t>(row) * cols_ + col] != 0;
}

bool BitmapWorld::segment_free(double x0, double y0, double x1, double y1) const {
  const double step = 1.0 / (2.0 * std::max(rows_, cols_));
  const double len = std::hypot(x1 - x0, y1 - y0);
  const int nsteps = std::max(1, static_cast<int>(std::ceil(len / step)));
  for (int k = 0; k <= nsteps; ++k) {
    const double t = static_cast<double>(k) / nsteps;
    if (point_occupied(x0 + t * (x1 - x0), y0 + t * (y1 - y0))) return false;
  }
  return true;
}

bool BitmapWorld::evaluate(const Graph& g, int edge_id) const {
  if (edge_id < 0 || edge_id >= g.num_edges())
    throw std::out_of_range("BitmapWorld: unknown edge id");
  if (g.dim() != 2)
    throw std::invalid_argument("BitmapWorld: graph must be 2-d");
  const EdgeRecord& e = g.edge(edge_id);
  const auto& a = g.vertex(e.u).position;
  const auto& b = g.vertex(e.v).position;
  return segment_free(a[0], a[1], b[0], b[1]);
}

EnvKind parse_env_kind(const std::string& name) {
  if (name == "square") return EnvKind::Square;
  if (name == "twowall") return EnvKind::TwoWall;
  if (name == "forest") return EnvKind::Forest;
  if (name == "maze") return EnvKind::Maze;
  throw std::invalid_argument("unknown environment '" + name + "'");
}

std::string env_kind_name(EnvKind kind) {
  switch (kind) {
    case EnvKind::Square: return "square";
    case EnvKind::TwoWall: return "twowall";
    case EnvKind::Forest: return "forest";
    case EnvKind::Maze: return "maze";
  }
  throw std::logic_error("bad EnvKind");
}

namespace {

// Two-wall slab geometry.  The clearance pads the slab by a little more than
// a grid cell so a sample accepted by twowall_static_blocked never lands in a
// partially painted boundary cell.
constexpr double kTwoWallHalf = 0.025;
constexpr double kTwoWallClearance = 0.012;

class GridPainter {
 public:
  GridPainter(int rows, int cols) : rows_(rows), cols_(cols), occ_(static_cast<std::size_t>(rows) * cols, 0) {}

  void fill_rect(double x0, double y0, double x1, double y1, std::uint8_t v) {
    int c0 = std::clamp(static_cast<int>(std::floor(x0 * cols_)), 0, cols_ - 1);
    int c1 = std::clamp(static_cast<int>(std::ceil(x1 * cols_)) - 1, 0, cols_ - 1);
    int r0 = std::clamp(static_cast<int>(std::floor(y0 * rows_)), 0, rows_ - 1);
    int r1 = std::clamp(static_cast<int>(std::ceil(y1 * rows_)) - 1, 0, rows_ - 1);
    for (int r = r0; r <= r1; ++r)
      for (int c = c0; c <= c1; ++c) occ_[static_cast<std::size_t>(r) * cols_ + c] = v;
  }

  void fill_disc(double cx, double cy, double radius, std::uint8_t v) {
    int c0 = std::clamp(static_cast<int>(std::floor((cx - radius) * cols_)), 0, cols_ - 1);
    int c1 = std::clamp(static_cast<int>(std::ceil((cx + radius) * cols_)), 0, cols_ - 1);
    int r0 = std::clamp(static_cast<int>(std::floor((cy - radius) * rows_)), 0, rows_ - 1);
    int r1 = std::clamp(static_cast<int>(std::ceil((cy + radius) * rows_)), 0, rows_ - 1);
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        double x = (c + 0.5) / cols_;
        double y = (r + 0.5) / rows_;
        if (std::hypot(x - cx, y - cy) <= radius)
          occ_[static_cast<std::size_t>(r) * cols_ + c] = v;
      }
    }
  }

  std::vector<std::uint8_t> take() { return std::move(occ_); }

 private:
  int rows_, cols_;
  std::vector<std::uint8_t> occ_;
};

constexpr double kCorridor = 0.08;   // minimum maze corridor width
constexpr double kWallThick = 0.03;  // maze wall thickness
constexpr double kGapLen = 0.10;     // maze gap length

void maze_divide(GridPainter& paint, SplitMix64& rng, double x0, double y0,
                 double x1, double y1) {
  const double w = x1 - x0;
  const double h = y1 - y0;
  const bool can_v = w >= 2.0 * kCorridor + kWallThick;
  const bool can_h = h >= 2.0 * kCorridor + kWallThick;
  if (!can_v && !can_h) return;
  const bool vertical = can_v && (!can_h || w >= h);
  if (vertical) {
    double wx = rng.uniform(x0 + kCorridor + kWallThick / 2,
                            x1 - kCorridor - kWallThick / 2);
    double gy = h > kGapLen ? rng.uniform(y0, y1 - kGapLen) : y0;
    paint.fill_rect(wx - kWallThick / 2, y0, wx + kWallThick / 2, y1, 1);
    paint.fill_rect(wx - kWallThick / 2, gy, wx + kWallThick / 2,
                    std::min(y1, gy + kGapLen), 0);
    maze_divide(paint, rng, x0, y0, wx - kWallThick / 2, y1);
    maze_divide(paint, rng, wx + kWallThick / 2, y0, x1, y1);
  } else {
    double wy = rng.uniform(y0 + kCorridor + kWallThick / 2,
                            y1 - kCorridor - kWallThick / 2);
    double gx = w > kGapLen ? rng.uniform(x0, x1 - kGapLen) : x0;
    paint.fill_rect(x0, wy - kWallThick / 2, x1, wy + kWallThick / 2, 1);
    paint.fill_rect(gx, wy - kWallThick / 2, std::min(x1, gx + kGapLen),
                    wy + kWallThick / 2, 0);
    maze_divide(paint, rng, x0, y0, x1, wy - kWallThick / 2);
    maze_divide(paint, rng, x0, wy + kWallThick / 2, x1, y1);
  }
}

std::vector<std::uint8_t> paint_world(EnvKind kind, std::uint64_t seed,
                                      const EnvParams& params) {
  SplitMix64 rng(seed);
  GridPainter paint(params.resolution, params.resolution);
  switch (kind) {
    case EnvKind::Square: {
      double side = rng.uniform(0.2, 0.4);
      double cx = rng.uniform(0.3, 0.7);
      double cy = rng.uniform(0.3, 0.7);
      paint.fill_rect(cx - side / 2, cy - side / 2, cx + side / 2, cy + side / 2, 1);
      break;
    }
    case EnvKind::TwoWall: {
      for (double wall_x : {1.0 / 3.0, 2.0 / 3.0}) {
        double gap_h = rng.uniform(0.06, 0.12);
        double gap_y = rng.uniform(0.05, 0.95 - gap_h);
        paint.fill_rect(wall_x - kTwoWallHalf, 0.0, wall_x + kTwoWallHalf, 1.0,
                        1);
        paint.fill_rect(wall_x - kTwoWallHalf, gap_y, wall_x + kTwoWallHalf,
                        gap_y + gap_h, 0);
      }
      break;
    }
    case EnvKind::Forest: {
      int count = rng.poisson(params.forest_density * 100.0);
      for (int i = 0; i < count; ++i) {
        double cx = rng.uniform();
        double cy = rng.uniform();
        double radius = rng.uniform(0.02, 0.05);
        paint.fill_disc(cx, cy, radius, 1);
      }
      break;
    }
    case EnvKind::Maze: {
      maze_divide(paint, rng, 0.0, 0.0, 1.0, 1.0);
      break;
    }
  }
  // Keep the canonical start and goal corners clear in every world.
  paint.fill_disc(0.05, 0.05, 0.06, 0);
  paint.fill_disc(0.95, 0.95, 0.06, 0);
  return paint.take();
}

bool grid_connected(const std::vector<std::uint8_t>& occ, int rows, int cols,
                    double sx, double sy, double gx, double gy) {
  auto cell = [&](double x, double y) {
    int c = std::clamp(static_cast<int>(x * cols), 0, cols - 1);
    int r = std::clamp(static_cast<int>(y * rows), 0, rows - 1);
    return r * cols + c;
  };
  const int start = cell(sx, sy);
  const int goal = cell(gx, gy);
  if (occ[start] || occ[goal]) return false;
  std::vector<std::uint8_t> seen(occ.size(), 0);
  std::queue<int> frontier;
  frontier.push(start);
  seen[start] = 1;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    if (cur == goal) return true;
    int r = cur / cols, c = cur % cols;
    const int dr[4] = {1, -1, 0, 0};
    const int dc[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int nr = r + dr[k], nc = c + dc[k];
      if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
      int idx = nr * cols + nc;
      if (!seen[idx] && !occ[idx]) {
        seen[idx] = 1;
        frontier.push(idx);
      }
    }
  }
  return false;
}

}  // namespace

BitmapWorld generate_world(EnvKind kind, std::uint64_t seed,
                           const EnvParams& params) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uint64_t s = seed + attempt;
    auto occ = paint_world(kind, s, params);
    if (grid_connected(occ, params.resolution, params.resolution, 0.05, 0.05,
                       0.95, 0.95)) {
      if (attempt > 0)
        std::cerr << "generate_world: " << env_kind_name(kind) << " seed "
                  << seed << " infeasible, substituted seed " << s << "\n";
      return BitmapWorld(params.resolution, params.resolution, std::move(occ));
    }
  }
  throw std::runtime_error("generate_world: no feasible world in 64 attempts");
}

bool twowall_static_blocked(double x, double y) {
  (void)y;  // the slabs span the full height; only the gaps vary per world
  for (double wall_x : {1.0 / 3.0, 2.0 / 3.0})
    if (std::abs(x - wall_x) < kTwoWallHalf + kTwoWallClearance) return true;
  return false;
}

std::vector<std::uint8_t> evaluate_all(const Graph& g, const World& world,
                                       bool parallel) {
  std::vector<std::uint8_t> valid(g.num_edges(), 0);
  parallel_for(valid.size(), parallel, [&](std::size_t e) {
    valid[e] = world.evaluate(g, static_cast<int>(e)) ? 1 : 0;
  });
  return valid;
}

PriorModel estimate_priors(const Graph& g,
                           const std::vector<const World*>& worlds,
                           bool parallel) {
  if (worlds.empty())
    throw std::invalid_argument("estimate_priors: empty training set");
  const int w = static_cast<int>(worlds.size());
  PriorModel model;
  model.prior.assign(g.num_edges(), 0.0);
  parallel_for(model.prior.size(), parallel, [&](std::size_t e) {
    int count = 0;
    for (const World* world : worlds)
      if (world->evaluate(g, static_cast<int>(e))) ++count;
    model.prior[e] = (count + 1.0) / (w + 2.0);
  });
  model.p_max =
      model.prior.empty() ? 0.0 : *std::max_element(model.prior.begin(), model.prior.end());
  return model;
}

void save_world(const ExplicitWorld& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "gls-world v1\n";
  for (int e = 0; e < w.num_edges(); ++e)
    out << e << ' ' << (w.bit(e) ? 1 : 0) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

void save_world(const BitmapWorld& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "gls-world v1\n";
  out << "grid " << w.rows() << ' ' << w.cols() << "\n";
  for (int r = 0; r < w.rows(); ++r) {
    std::string line(w.cols(), '0');
    for (int c = 0; c < w.cols(); ++c)
      if (w.occupied(r, c)) line[c] = '1';
    out << line << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::unique_ptr<World> load_world(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "gls-world v1")
    throw ParseError(path + ": bad header");
  std::streampos body = in.tellg();
  if (!std::getline(in, line)) throw ParseError(path + ": empty body");
  if (line.rfind("grid ", 0) == 0) {
    std::istringstream gs(line);
    std::string tag;
    int rows = 0, cols = 0;
    gs >> tag >> rows >> cols;
    if (!gs || rows < 1 || cols < 1)
      throw ParseError(path + ": bad grid header");
    std::vector<std::uint8_t> occ;
    occ.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      if (!std::getline(in, line) || static_cast<int>(line.size()) != cols)
        throw ParseError(path + ": bad grid row " + std::to_string(r));
      for (char ch : line) {
        if (ch != '0' && ch != '1')
          throw ParseError(path + ": grid cells must be 0 or 1");
        occ.push_back(ch == '1' ? 1 : 0);
      }
    }
    return std::make_unique<BitmapWorld>(rows, cols, std::move(occ));
  }
  in.clear();
  in.seekg(body);
  std::vector<std::uint8_t> valid;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::istringstream ls(line);
    std::string idtok, bittok, extra;
    if (!(ls >> idtok >> bittok) || (ls >> extra))
      throw ParseError(where + ": expected '<edge_id> <0|1>'");
    long id = parse_long(idtok, where);
    long bit = parse_long(bittok, where);
    if (id != static_cast<long>(valid.size()))
      throw ParseError(where + ": edge ids must be dense and ordered");
    if (bit != 0 && bit != 1) throw ParseError(where + ": bit must be 0 or 1");
    valid.push_back(static_cast<std::uint8_t>(bit));
  }
  if (valid.empty()) throw ParseError(path + ": no edge lines");
  return std::make_unique<ExplicitWorld>(std::move(valid));
}

void save_priors(const PriorModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t e = 0; e < m.prior.size(); ++e)
    out << e << ' ' << format_double(m.prior[e]) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

PriorModel load_priors(const std::string& path, int num_edges) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  PriorModel m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    std::istringstream ls(line);
    std::string idtok, ptok, extra;
    if (!(ls >> idtok >> ptok) || (ls >> extra))
      throw ParseError(where + ": expected '<edge_id> <prior>'");
    long id = parse_long(idtok, where);
    double p = parse_double(ptok, where);
    if (id != static_cast<long>(m.prior.size()))
      throw ParseError(where + ": edge ids must be dense and ordered");
    if (!(p >= 0.0 && p <= 1.0))
      throw ParseError(where + ": prior must be in [0,1]");
    m.prior.push_back(p);
  }
  if (static_cast<int>(m.prior.size()) != num_edges)
    throw ParseError(path + ": prior count does not match edge count");
  m.p_max = m.prior.empty() ? 0.0
                            : *std::max_element(m.prior.begin(), m.prior.end());
  return m;
}

}  // namespace gls
