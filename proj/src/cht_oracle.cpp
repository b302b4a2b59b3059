#include "polyhaar/cht_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyhaar {
namespace {

using i64 = std::int64_t;

bool is_pow2(i64 v) { return v > 0 && (v & (v - 1)) == 0; }

// weighted coverage integral per grid cell: g[iy*res+ix] = sum_i w_i *
// area(P_i n cell). Restricting each polygon to the cells its bounding box
// touches keeps the build near-linear in covered area.
std::vector<double> coverage_grid(const Pattern& pattern, int res) {
  const Tile& tile = pattern.tile();
  const double cw = double(tile.tx()) / res;
  const double ch = double(tile.ty()) / res;
  std::vector<double> grid(std::size_t(res) * res, 0.0);
  ClipScratch scratch;
  for (const WeightedPolygon& item : pattern.items()) {
    if (item.weight == 0.0) continue;
    const Rect& bb = item.polygon.bounds();
    const int ix0 = std::max(0, int(std::floor(bb.x0 / cw)));
    const int ix1 = std::min(res - 1, int(std::floor(bb.x1 / cw)));
    const int iy0 = std::max(0, int(std::floor(bb.y0 / ch)));
    const int iy1 = std::min(res - 1, int(std::floor(bb.y1 / ch)));
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        const Rect cell{ix * cw, iy * ch, (ix + 1) * cw, (iy + 1) * ch};
        const double a = intersection_area(item.polygon, cell, scratch);
        if (a != 0.0) grid[std::size_t(iy) * res + ix] += item.weight * a;
      }
    }
  }
  return grid;
}

// signed sum of grid values over the support of the basis function; the
// magnitude factor is applied by the caller
double signed_support_sum(const std::vector<double>& grid, int res, const HaarBasis& basis) {
  if (basis.is_dc) {
    double sum = 0.0;
    for (double v : grid) sum += v;
    return sum;
  }
  const i64 cells = i64(res) >> basis.level;  // support width in grid cells
  const i64 half = cells / 2;
  const i64 x0 = basis.kx * cells;
  const i64 y0 = basis.ky * cells;
  double sum = 0.0;
  for (i64 iy = y0; iy < y0 + cells; ++iy) {
    const bool y_high = (iy - y0) >= half;
    for (i64 ix = x0; ix < x0 + cells; ++ix) {
      const bool x_high = (ix - x0) >= half;
      double sign = 1.0;
      switch (basis.band) {
        case Subband::HL: sign = x_high ? -1.0 : 1.0; break;
        case Subband::LH: sign = y_high ? -1.0 : 1.0; break;
        case Subband::HH: sign = (x_high != y_high) ? -1.0 : 1.0; break;
      }
      sum += sign * grid[std::size_t(iy) * res + ix];
    }
  }
  return sum;
}

void check_resolution(const HaarBasis& basis, int res) {
  if (!is_pow2(res)) throw std::invalid_argument("resolution must be a power of two");
  if (!basis.is_dc) {
    if (basis.level < 0 || basis.level > 30)
      throw std::invalid_argument("basis level out of range");
    if (res < (i64(1) << (basis.level + 1)))
      throw std::invalid_argument("resolution too coarse for the basis support");
    if (basis.kx < 0 || basis.kx >= (i64(1) << basis.level) || basis.ky < 0 ||
        basis.ky >= (i64(1) << basis.level))
      throw std::invalid_argument("basis shift out of range");
  }
}

double basis_magnitude(const Tile& tile, int level) {
  return std::ldexp(1.0, level) / std::sqrt(tile.area());
}

}  // namespace

double cht_inner_product_oracle(const Pattern& pattern, const HaarBasis& basis, int resolution) {
  check_resolution(basis, resolution);
  const std::vector<double> grid = coverage_grid(pattern, resolution);
  const double mag = basis_magnitude(pattern.tile(), basis.is_dc ? 0 : basis.level);
  return mag * signed_support_sum(grid, resolution, basis);
}

CoefficientSet cht_oracle_all(const Pattern& pattern, int resolution) {
  const Tile& tile = pattern.tile();
  if (!is_pow2(resolution) || resolution < (i64(1) << tile.depth()))
    throw std::invalid_argument("resolution must be a power of two >= 2^depth");
  const std::vector<double> grid = coverage_grid(pattern, resolution);

  CoefficientSet out;
  out.set_dc(basis_magnitude(tile, 0) * signed_support_sum(grid, resolution, HaarBasis::dc()));
  for (int level = 0; level < tile.depth(); ++level) {
    const double mag = basis_magnitude(tile, level);
    const i64 shifts = i64(1) << level;
    for (i64 ky = 0; ky < shifts; ++ky) {
      for (i64 kx = 0; kx < shifts; ++kx) {
        for (Subband band : {Subband::HL, Subband::LH, Subband::HH}) {
          const HaarBasis basis = HaarBasis::detail(band, level, kx, ky);
          const double v = mag * signed_support_sum(grid, resolution, basis);
          out.add(band, level, kx, ky, v);
        }
      }
    }
  }
  return out;
}

}  // namespace polyhaar
