#include "polyhaar/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace polyhaar {
namespace {

using i64 = std::int64_t;

constexpr double kRelTol = 1e-9;

bool is_pow2(i64 v) { return v > 0 && (v & (v - 1)) == 0; }

// Exact overlap area for two rectilinear-integer polygons inside region r,
// by dyadic refinement down to unit cells. At a unit cell the intersection
// with either polygon is empty or total, so the recursion is exact.
double overlap_int(const Polygon& a, const Polygon& b, i64 x0, i64 y0, i64 x1, i64 y1,
                   ClipScratch& scratch) {
  const Rect r{double(x0), double(y0), double(x1), double(y1)};
  const double rarea = r.area();
  const double ia = intersection_area(a, r, scratch);
  if (ia == 0.0) return 0.0;
  const double ib = intersection_area(b, r, scratch);
  if (ib == 0.0) return 0.0;
  if (ia == rarea && ib == rarea) return rarea;
  const i64 w = x1 - x0;
  const i64 h = y1 - y0;
  double total = 0.0;
  if (w > 1 && h > 1) {
    const i64 mx = x0 + w / 2;
    const i64 my = y0 + h / 2;
    total += overlap_int(a, b, x0, y0, mx, my, scratch);
    total += overlap_int(a, b, mx, y0, x1, my, scratch);
    total += overlap_int(a, b, x0, my, mx, y1, scratch);
    total += overlap_int(a, b, mx, my, x1, y1, scratch);
  } else if (w > 1) {
    const i64 mx = x0 + w / 2;
    total += overlap_int(a, b, x0, y0, mx, y1, scratch);
    total += overlap_int(a, b, mx, y0, x1, y1, scratch);
  } else if (h > 1) {
    const i64 my = y0 + h / 2;
    total += overlap_int(a, b, x0, y0, x1, my, scratch);
    total += overlap_int(a, b, x0, my, x1, y1, scratch);
  }
  // 1x1 and not both full means one side was empty, handled above
  return total;
}

// Lower-bound overlap estimate for general-real pairs; refines until the
// region is small relative to the polygons, then uses a + b - |r|.
double overlap_real(const Polygon& a, const Polygon& b, const Rect& r, double stop_area,
                    ClipScratch& scratch) {
  const double rarea = r.area();
  const double ia = intersection_area(a, r, scratch);
  if (ia <= 0.0) return 0.0;
  const double ib = intersection_area(b, r, scratch);
  if (ib <= 0.0) return 0.0;
  if (ia >= rarea * (1.0 - kRelTol) && ib >= rarea * (1.0 - kRelTol)) return std::min(ia, ib);
  if (rarea <= stop_area) return std::max(0.0, ia + ib - rarea);
  const double mx = (r.x0 + r.x1) * 0.5;
  const double my = (r.y0 + r.y1) * 0.5;
  return overlap_real(a, b, Rect{r.x0, r.y0, mx, my}, stop_area, scratch) +
         overlap_real(a, b, Rect{mx, r.y0, r.x1, my}, stop_area, scratch) +
         overlap_real(a, b, Rect{r.x0, my, mx, r.y1}, stop_area, scratch) +
         overlap_real(a, b, Rect{mx, my, r.x1, r.y1}, stop_area, scratch);
}

double pair_overlap_area(const Polygon& a, const Polygon& b, ClipScratch& scratch) {
  const Rect& ba = a.bounds();
  const Rect& bb = b.bounds();
  const double x0 = std::max(ba.x0, bb.x0);
  const double y0 = std::max(ba.y0, bb.y0);
  const double x1 = std::min(ba.x1, bb.x1);
  const double y1 = std::min(ba.y1, bb.y1);
  if (x0 >= x1 || y0 >= y1) return 0.0;
  if (a.kind() == PolygonKind::RectilinearInteger && b.kind() == PolygonKind::RectilinearInteger) {
    return overlap_int(a, b, i64(x0), i64(y0), i64(x1), i64(y1), scratch);
  }
  const double stop = 1e-6 * std::min(a.area(), b.area());
  return overlap_real(a, b, Rect{std::floor(x0), std::floor(y0), std::ceil(x1), std::ceil(y1)},
                      stop, scratch);
}

}  // namespace

Tile::Tile(i64 tx, i64 ty, int depth) : tx_(tx), ty_(ty), depth_(depth) {
  if (tx <= 0 || ty <= 0) throw std::invalid_argument("tile extents must be positive");
  if (tx > kMaxIntegerCoord || ty > kMaxIntegerCoord)
    throw std::invalid_argument("tile extent exceeds exact-arithmetic range");
  if (depth < 0 || depth > 31) throw std::invalid_argument("depth must be in [0, 31]");
  const i64 cells = i64(1) << depth;
  if (tx % cells != 0 || ty % cells != 0)
    throw std::invalid_argument("tile extents must be divisible by 2^depth");
}

Rect Tile::cell(int level, i64 kx, i64 ky) const {
  const i64 w = tx_ >> level;
  const i64 h = ty_ >> level;
  return Rect{double(kx * w), double(ky * h), double((kx + 1) * w), double((ky + 1) * h)};
}

int Tile::default_depth(i64 tx, i64 ty) {
  if (!is_pow2(tx) || !is_pow2(ty)) throw std::invalid_argument("extents are not powers of two");
  const i64 m = std::min(tx, ty);
  int j = 0;
  while ((i64(1) << (j + 1)) <= m) ++j;
  return j;
}

Pattern::Pattern(Tile tile, std::vector<WeightedPolygon> items)
    : tile_(tile), items_(std::move(items)) {
  for (const WeightedPolygon& item : items_) {
    if (!std::isfinite(item.weight)) throw std::invalid_argument("weight must be finite");
  }
}

std::size_t Pattern::total_vertex_count() const {
  std::size_t k = 0;
  for (const WeightedPolygon& item : items_) k += item.polygon.vertex_count();
  return k;
}

std::string Violation::describe() const {
  char buf[128];
  switch (kind) {
    case ViolationKind::OutOfTile:
      std::snprintf(buf, sizeof buf, "OutOfTile(%zu)", first);
      break;
    case ViolationKind::Overlap:
      std::snprintf(buf, sizeof buf, "Overlap(%zu,%zu,%.17g)", first, second, overlap_area);
      break;
    case ViolationKind::NonSimple:
      std::snprintf(buf, sizeof buf, "NonSimple(%zu)", first);
      break;
  }
  return buf;
}

std::vector<Violation> validate(const Pattern& pattern) {
  std::vector<Violation> out;
  const Tile& tile = pattern.tile();
  const auto& items = pattern.items();

  for (std::size_t i = 0; i < items.size(); ++i) {
    const Rect& bb = items[i].polygon.bounds();
    if (bb.x0 < 0.0 || bb.y0 < 0.0 || bb.x1 > double(tile.tx()) || bb.y1 > double(tile.ty()))
      out.push_back({ViolationKind::OutOfTile, i, 0, 0.0});
  }

  ClipScratch scratch;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Polygon& a = items[i].polygon;
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const Polygon& b = items[j].polygon;
      const Rect& ba = a.bounds();
      const Rect& bbx = b.bounds();
      if (ba.x1 <= bbx.x0 || bbx.x1 <= ba.x0 || ba.y1 <= bbx.y0 || bbx.y1 <= ba.y0) continue;
      const double area = pair_overlap_area(a, b, scratch);
      const bool exact = a.kind() == PolygonKind::RectilinearInteger &&
                         b.kind() == PolygonKind::RectilinearInteger;
      const double threshold = exact ? 0.0 : kRelTol * std::min(a.area(), b.area());
      if (area > threshold) out.push_back({ViolationKind::Overlap, i, j, area});
    }
  }
  return out;
}

double pattern_energy(const Pattern& pattern) {
  double total = 0.0;
  for (const WeightedPolygon& item : pattern.items()) {
    total += item.weight * item.weight * item.polygon.area();
  }
  return total;
}

}  // namespace polyhaar
