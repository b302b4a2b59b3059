#pragma once

#include <cstdint>

#include "polyhaar/coefficients.hpp"
#include "polyhaar/pattern.hpp"

namespace polyhaar {

struct TransformStats {
  std::uint64_t nodes_visited = 0;     // recursion entries
  std::uint64_t area_calls = 0;        // intersection-area evaluations
  std::uint64_t pruned_empty = 0;      // empty-cell terminations
  std::uint64_t pruned_full = 0;       // full-cell terminations
  std::uint64_t leaf_terminations = 0; // max-depth terminations

  TransformStats& operator+=(const TransformStats& o) {
    nodes_visited += o.nodes_visited;
    area_calls += o.area_calls;
    pruned_empty += o.pruned_empty;
    pruned_full += o.pruned_full;
    leaf_terminations += o.leaf_terminations;
    return *this;
  }
  friend bool operator==(const TransformStats&, const TransformStats&) = default;
};

struct PchtResult {
  CoefficientSet coefficients;
  TransformStats stats;
};

// Pruned recursive transform of one polygon over the dyadic cell
// (level, kx, ky). Detail coefficients are accumulated into `out` scaled
// by `scale` (doubled at each level); the return value is the raw
// intersection area of the polygon with the cell, i.e. the partial sum a
// parent combines in its butterfly. Recursion stops at empty cells, full
// cells, and level == tile.depth().
double pcht_polygon(const Polygon& poly, const Tile& tile, int level, std::int64_t kx,
                    std::int64_t ky, double scale, CoefficientSet& out, TransformStats& stats);

// Full transform of a pattern: per-polygon recursion with initial scale
// w_i / sqrt(tx*ty), coefficients accumulated across polygons, exact zeros
// purged at the end.
PchtResult pcht_pattern(const Pattern& pattern);

// Benchmark variant: identical traversal, coefficients folded into a
// checksum instead of stored.
struct PchtFoldResult {
  double checksum = 0.0;
  TransformStats stats;
};
PchtFoldResult pcht_pattern_fold(const Pattern& pattern);

}  // namespace polyhaar
