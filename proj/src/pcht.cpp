#include "polyhaar/pcht.hpp"

#include <cmath>

namespace polyhaar {
namespace {

using i64 = std::int64_t;

constexpr double kRelTol = 1e-9;

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
struct Recursion {
  const Polygon* poly;
  const Tile* tile;
  bool exact;  // rectilinear-integer polygon: empty/full tests use ==
  ClipScratch* scratch;
  TransformStats* stats;
  Sink* sink;

  double run(int level, i64 kx, i64 ky, double scale) {
    ++stats->nodes_visited;
    ++stats->area_calls;
    const Rect cell = tile->cell(level, kx, ky);
    const double area = intersection_area(*poly, cell, *scratch);
    const double cell_area = tile->cell_area(level);

    if (exact ? area == 0.0 : area <= kRelTol * cell_area) {
      ++stats->pruned_empty;
      return area;
    }
    if (exact ? area == cell_area : std::abs(area - cell_area) <= kRelTol * cell_area) {
      ++stats->pruned_full;
      return area;
    }
    if (level == tile->depth()) {
      ++stats->leaf_terminations;
      return area;
    }

    const double child_scale = 2.0 * scale;
    const double s00 = run(level + 1, 2 * kx, 2 * ky, child_scale);
    const double s10 = run(level + 1, 2 * kx + 1, 2 * ky, child_scale);
    const double s01 = run(level + 1, 2 * kx, 2 * ky + 1, child_scale);
    const double s11 = run(level + 1, 2 * kx + 1, 2 * ky + 1, child_scale);

    const double row0_diff = s00 - s10;
    const double row0_sum = s00 + s10;
    const double row1_diff = s01 - s11;
    const double row1_sum = s01 + s11;

    sink->add(Subband::HL, level, kx, ky, scale * (row0_diff + row1_diff));
    sink->add(Subband::LH, level, kx, ky, scale * (row0_sum - row1_sum));
    sink->add(Subband::HH, level, kx, ky, scale * (row0_diff - row1_diff));
    return row0_sum + row1_sum;
  }
};

template <typename Sink>
double transform_into(const Pattern& pattern, Sink& sink, TransformStats& stats,
                      ClipScratch& scratch) {
  const Tile& tile = pattern.tile();
  const double root_scale = 1.0 / std::sqrt(tile.area());
  double weighted_root_sum = 0.0;
  for (const WeightedPolygon& item : pattern.items()) {
    Recursion<Sink> rec{&item.polygon, &tile,
                        item.polygon.kind() == PolygonKind::RectilinearInteger, &scratch, &stats,
                        &sink};
    const double root = rec.run(0, 0, 0, root_scale * item.weight);
    weighted_root_sum += item.weight * root;
  }
  return root_scale * weighted_root_sum;
}

}  // namespace

double pcht_polygon(const Polygon& poly, const Tile& tile, int level, i64 kx, i64 ky, double scale,
                    CoefficientSet& out, TransformStats& stats) {
  StoreSink sink{&out};
  ClipScratch scratch;
  Recursion<StoreSink> rec{&poly, &tile, poly.kind() == PolygonKind::RectilinearInteger, &scratch,
                           &stats, &sink};
  return rec.run(level, kx, ky, scale);
}

PchtResult pcht_pattern(const Pattern& pattern) {
  PchtResult result;
  StoreSink sink{&result.coefficients};
  ClipScratch scratch;
  result.coefficients.set_dc(transform_into(pattern, sink, result.stats, scratch));
  result.coefficients.purge_zeros();
  return result;
}

PchtFoldResult pcht_pattern_fold(const Pattern& pattern) {
  PchtFoldResult result;
  FoldSink sink;
  sink.acc = 0.0;
  ClipScratch scratch;
  const double dc = transform_into(pattern, sink, result.stats, scratch);
  result.checksum = sink.acc + dc;
  return result;
}

}  // namespace polyhaar
