#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyhaar/geometry.hpp"

namespace polyhaar {

// Transform domain [0,tx) x [0,ty) with maximum decomposition depth. Both
// extents must be divisible by 2^depth so every dyadic cell has integer
// corners.
class Tile {
 public:
  Tile(std::int64_t tx, std::int64_t ty, int depth);

  std::int64_t tx() const { return tx_; }
  std::int64_t ty() const { return ty_; }
  int depth() const { return depth_; }

  double area() const { return double(tx_) * double(ty_); }
  std::int64_t cell_width(int level) const { return tx_ >> level; }
  std::int64_t cell_height(int level) const { return ty_ >> level; }
  double cell_area(int level) const {
    return double(cell_width(level)) * double(cell_height(level));
  }
  Rect cell(int level, std::int64_t kx, std::int64_t ky) const;
  Rect domain() const { return Rect{0.0, 0.0, double(tx_), double(ty_)}; }

  // log2(min(tx,ty)) when both extents are powers of two.
  static int default_depth(std::int64_t tx, std::int64_t ty);

  friend bool operator==(const Tile&, const Tile&) = default;

 private:
  std::int64_t tx_;
  std::int64_t ty_;
  int depth_;
};

struct WeightedPolygon {
  Polygon polygon;
  double weight = 1.0;
};

// Weighted set of polygons over a tile. Pairwise-disjoint interiors are a
// validated precondition (see validate), not enforced at construction.
class Pattern {
 public:
  Pattern(Tile tile, std::vector<WeightedPolygon> items);

  const Tile& tile() const { return tile_; }
  const std::vector<WeightedPolygon>& items() const { return items_; }
  std::size_t polygon_count() const { return items_.size(); }
  std::size_t total_vertex_count() const;

 private:
  Tile tile_;
  std::vector<WeightedPolygon> items_;
};

enum class ViolationKind { OutOfTile, Overlap, NonSimple };

struct Violation {
  ViolationKind kind = ViolationKind::OutOfTile;
  std::size_t first = 0;
  std::size_t second = 0;
  double overlap_area = 0.0;

  std::string describe() const;
};

// Checks tile containment and pairwise interior disjointness. Disjointness
// is decided by recursive dyadic refinement of the shared bounding box:
// exact for rectilinear-integer pairs, tolerance-bounded (1e-9 of the
// smaller polygon area) otherwise. Empty result means the pattern is valid.
std::vector<Violation> validate(const Pattern& pattern);

// sum of w_i^2 * area(P_i); equals <f,f> for disjoint interiors.
double pattern_energy(const Pattern& pattern);

enum class SyntheticKind { ContactArray, RandomRectilinear };

struct PlacementFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic synthetic layouts. ContactArray places `count` equal
// squares on a regular grid with disjointness-preserving jitter;
// RandomRectilinear builds each polygon as the outline of 1-4 overlapping
// axis-aligned rectangles and places it by rejection sampling. All
// weights are 1. Throws PlacementFailure after 10000 rejected attempts.
Pattern generate_synthetic(SyntheticKind kind, const Tile& tile, int count, std::uint64_t seed);

}  // namespace polyhaar
