#include "polyhaar/dht.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyhaar {
namespace {

using i64 = std::int64_t;

// Scanline fill at cell centers; equivalent to a crossing-parity test per
// center but touches each covered cell once. Crossings use the half-open
// [ymin, ymax) edge rule so shared vertices are counted exactly once.
void fill_binary(Raster& raster, const Polygon& poly, double weight, double cx, double cy) {
  const int n = raster.side;
  const auto& verts = poly.vertices();
  const Rect& bb = poly.bounds();
  const int iy0 = std::max(0, int(std::floor(bb.y0 / cy)));
  const int iy1 = std::min(n - 1, int(std::floor(bb.y1 / cy)));
  std::vector<double> crossings;
  for (int iy = iy0; iy <= iy1; ++iy) {
    const double yc = (iy + 0.5) * cy;
    crossings.clear();
    for (std::size_t i = 0, k = verts.size(); i < k; ++i) {
      const Point& a = verts[i];
      const Point& b = verts[(i + 1 == k) ? 0 : i + 1];
      if ((a.y > yc) != (b.y > yc)) {
        crossings.push_back(a.x + (b.x - a.x) * (yc - a.y) / (b.y - a.y));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t s = 0; s + 1 < crossings.size(); s += 2) {
      // centers with crossings[s] <= (ix+0.5)*cx < crossings[s+1]
      const int ix0 = std::max(0, int(std::ceil(crossings[s] / cx - 0.5)));
      const int ix1 = std::min(n - 1, int(std::ceil(crossings[s + 1] / cx - 0.5)) - 1);
      for (int ix = ix0; ix <= ix1; ++ix) raster.at(ix, iy) += weight;
    }
  }
}

void fill_coverage(Raster& raster, const Polygon& poly, double weight, double cx, double cy,
                   ClipScratch& scratch) {
  const int n = raster.side;
  const Rect& bb = poly.bounds();
  const double cell_area = cx * cy;
  const int ix0 = std::max(0, int(std::floor(bb.x0 / cx)));
  const int ix1 = std::min(n - 1, int(std::floor(bb.x1 / cx)));
  const int iy0 = std::max(0, int(std::floor(bb.y0 / cy)));
  const int iy1 = std::min(n - 1, int(std::floor(bb.y1 / cy)));
  for (int iy = iy0; iy <= iy1; ++iy) {
    for (int ix = ix0; ix <= ix1; ++ix) {
      const Rect cell{ix * cx, iy * cy, (ix + 1) * cx, (iy + 1) * cy};
      const double a = intersection_area(poly, cell, scratch);
      if (a != 0.0) raster.at(ix, iy) += weight * a / cell_area;
    }
  }
}

struct StoreSink {
  CoefficientSet* out;
  void add(Subband band, int level, i64 kx, i64 ky, double v) {
    out->add(band, level, kx, ky, v);
  }
};

struct FoldSink {
  double acc = 0.0;
  void add(Subband, int, i64, i64, double v) { acc += v; }
};

template <typename Sink>
double dense_butterflies(const Raster& raster, const Tile& tile, Sink& sink, DhtStats& stats,
                         DhtWorkspace& ws) {
  const int depth = tile.depth();
  const int n = raster.side;
  if (n != (1 << depth)) throw std::invalid_argument("raster side does not match 2^depth");

  const double cell_area = tile.cell_area(depth);
  const double root_scale = 1.0 / std::sqrt(tile.area());

  std::vector<double>& cur = ws.cur;
  cur.resize(raster.cells.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = raster.cells[i] * cell_area;

  std::vector<double>& next = ws.next;
  for (int level = depth - 1; level >= 0; --level) {
    const int m = 1 << level;
    const int src = 2 * m;
    const double s = std::ldexp(root_scale, level);
    next.assign(std::size_t(m) * m, 0.0);
    for (int ky = 0; ky < m; ++ky) {
      for (int kx = 0; kx < m; ++kx) {
        const double s00 = cur[std::size_t(2 * ky) * src + 2 * kx];
        const double s10 = cur[std::size_t(2 * ky) * src + 2 * kx + 1];
        const double s01 = cur[std::size_t(2 * ky + 1) * src + 2 * kx];
        const double s11 = cur[std::size_t(2 * ky + 1) * src + 2 * kx + 1];
        const double row0_diff = s00 - s10;
        const double row0_sum = s00 + s10;
        const double row1_diff = s01 - s11;
        const double row1_sum = s01 + s11;
        sink.add(Subband::HL, level, kx, ky, s * (row0_diff + row1_diff));
        sink.add(Subband::LH, level, kx, ky, s * (row0_sum - row1_sum));
        sink.add(Subband::HH, level, kx, ky, s * (row0_diff - row1_diff));
        next[std::size_t(ky) * m + kx] = row0_sum + row1_sum;
        ++stats.butterfly_nodes;
      }
    }
    cur.swap(next);
  }
  return root_scale * cur[0];
}

}  // namespace

void rasterize_into(const Pattern& pattern, RasterMode mode, Raster& out) {
  const Tile& tile = pattern.tile();
  const int n = 1 << tile.depth();
  const double cx = double(tile.tx()) / n;
  const double cy = double(tile.ty()) / n;
  out.side = n;
  out.cells.assign(std::size_t(n) * n, 0.0);
  ClipScratch scratch;
  for (const WeightedPolygon& item : pattern.items()) {
    if (mode == RasterMode::BinarySample) {
      fill_binary(out, item.polygon, item.weight, cx, cy);
    } else {
      fill_coverage(out, item.polygon, item.weight, cx, cy, scratch);
    }
  }
}

Raster rasterize(const Pattern& pattern, RasterMode mode) {
  Raster raster;
  rasterize_into(pattern, mode, raster);
  return raster;
}

CoefficientSet dht_transform(const Raster& raster, const Tile& tile, DhtStats* stats) {
  CoefficientSet out;
  StoreSink sink{&out};
  DhtStats local;
  DhtWorkspace ws;
  out.set_dc(dense_butterflies(raster, tile, sink, local, ws));
  out.purge_zeros();
  if (stats) *stats = local;
  return out;
}

DhtFoldResult dht_transform_fold(const Raster& raster, const Tile& tile,
                                 DhtWorkspace* workspace) {
  DhtFoldResult result;
  FoldSink sink;
  DhtWorkspace local;
  DhtWorkspace& ws = workspace ? *workspace : local;
  const double dc = dense_butterflies(raster, tile, sink, result.stats, ws);
  result.checksum = sink.acc + dc;
  return result;
}

}  // namespace polyhaar
