#pragma once

#include <cstdint>
#include <vector>

#include "polyhaar/coefficients.hpp"
#include "polyhaar/pattern.hpp"

namespace polyhaar {

// Dense sample grid over the tile: side = 2^depth cells, cell (ix,iy)
// covering [ix*cx,(ix+1)*cx) x [iy*cy,(iy+1)*cy), origin at the tile
// corner, row-major with iy along +y.
struct Raster {
  int side = 0;
  std::vector<double> cells;

  double at(int ix, int iy) const { return cells[std::size_t(iy) * side + ix]; }
  double& at(int ix, int iy) { return cells[std::size_t(iy) * side + ix]; }
};

enum class RasterMode {
  BinarySample,   // cell value = sum of weights of polygons containing the cell center
  ExactCoverage,  // cell value = sum of w_i * area(P_i n cell) / cellArea
};

Raster rasterize(const Pattern& pattern, RasterMode mode);

// In-place variant for measurement loops: reuses the raster's storage so a
// repetition pays for clearing and filling the grid, not for the allocator.
void rasterize_into(const Pattern& pattern, RasterMode mode, Raster& out);

struct DhtStats {
  std::uint64_t butterfly_nodes = 0;  // always (4^depth - 1) / 3
};

// Full (unpruned) fast transform over the raster: leaf values are cell
// value times cell area, then the same butterfly combination as the pruned
// transform is applied bottom-up over every node. Exact zeros are dropped
// from the output only; the work performed is dense. Throws
// std::invalid_argument when raster.side != 2^depth.
CoefficientSet dht_transform(const Raster& raster, const Tile& tile, DhtStats* stats = nullptr);

// Benchmark variant: coefficients folded into a checksum instead of stored.
// A workspace, when provided, keeps the level buffers alive across calls.
struct DhtWorkspace {
  std::vector<double> cur;
  std::vector<double> next;
};
struct DhtFoldResult {
  double checksum = 0.0;
  DhtStats stats;
};
DhtFoldResult dht_transform_fold(const Raster& raster, const Tile& tile,
                                 DhtWorkspace* workspace = nullptr);

}  // namespace polyhaar
