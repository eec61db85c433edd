#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gls/graph.hpp"

namespace gls {

// Ground-truth validity oracle for edges.  evaluate() is pure: repeated
// queries for the same edge always agree, and the engine's evaluation record
// is the only side channel.
class World {
 public:
  virtual ~World() = default;
  virtual bool evaluate(const Graph& g, int edge_id) const = 0;
};

// Validity bits stored per edge id.
class ExplicitWorld : public World {
 public:
  explicit ExplicitWorld(std::vector<std::uint8_t> valid)
      : valid_(std::move(valid)) {}
  bool evaluate(const Graph& g, int edge_id) const override;
  int num_edges() const { return static_cast<int>(valid_.size()); }
  bool bit(int edge_id) const { return valid_.at(edge_id) != 0; }

 private:
  std::vector<std::uint8_t> valid_;
};

// Occupancy grid over the unit square; an edge is valid iff the segment
// between its endpoint positions touches no occupied cell.  The segment is
// sampled with step <= 1/(2 * resolution) so no cell can be skipped over.
class BitmapWorld : public World {
 public:
  BitmapWorld(int rows, int cols, std::vector<std::uint8_t> occupied);
  bool evaluate(const Graph& g, int edge_id) const override;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool occupied(int row, int col) const;
  bool point_occupied(double x, double y) const;
  bool segment_free(double x0, double y0, double x1, double y1) const;
  const std::vector<std::uint8_t>& cells() const { return occupied_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> occupied_;  // row-major, rows_ * cols_
};

enum class EnvKind { Square, TwoWall, Forest, Maze };

EnvKind parse_env_kind(const std::string& name);
std::string env_kind_name(EnvKind kind);

struct EnvParams {
  int resolution = 256;        // grid cells per unit
  double forest_density = 0.5; // obstacle count ~ Poisson(density * 100)
};

// Deterministic procedural world.  If the free space fails the start-goal
// flood-fill check the world is regenerated with seed+1 (and the substitution
// is logged to stderr); corners (0.05,0.05) and (0.95,0.95) are always clear.
BitmapWorld generate_world(EnvKind kind, std::uint64_t seed,
                           const EnvParams& params = {});

// True when the point lies inside a two-wall slab.  The slabs sit at the same
// place in every two-wall world (only the gaps move), so roadmap builders can
// reject samples here the way they would for any statically known obstacle.
bool twowall_static_blocked(double x, double y);

// Batch collision kernel: validity bit per edge.  parallel=true uses the
// OpenMP path; the serial path is the reference the tests compare against.
std::vector<std::uint8_t> evaluate_all(const Graph& g, const World& world,
                                       bool parallel = true);

struct PriorModel {
  std::vector<double> prior;  // per edge id
  double p_max = 0.0;
};

// Per-edge Bernoulli validity priors from training worlds with Laplace
// (add-one) smoothing, so 0 < prior < 1 and p_max < 1 always hold.
PriorModel estimate_priors(const Graph& g,
                           const std::vector<const World*>& worlds,
                           bool parallel = true);

// World files start with "gls-world v1"; bitmaps follow with
// "grid <rows> <cols>" plus rows of 0/1 characters, explicit worlds with
// "<edge_id> <0|1>" lines (1 = valid), one per edge, dense ids.
void save_world(const ExplicitWorld& w, const std::string& path);
void save_world(const BitmapWorld& w, const std::string& path);
std::unique_ptr<World> load_world(const std::string& path);

// Priors files are bare "<edge_id> <prior>" lines, dense ids.
void save_priors(const PriorModel& m, const std::string& path);
PriorModel load_priors(const std::string& path, int num_edges);

}  // namespace gls
