#include "polyhaar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace polyhaar {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

bool is_integral(double v) { return std::floor(v) == v; }

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

i128 icross(IPoint o, IPoint a, IPoint b) {
  return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Remove exact consecutive duplicates, including the wrap-around pair.
void drop_duplicates(std::vector<Point>& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const Point& p : v) {
    if (out.empty() || !(p == out.back())) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  v = std::move(out);
}

// Drop vertices whose neighbours are collinear with them (covers straight
// runs and zero-width spikes). A run of consecutive drops always lies on a
// single line, so using the original neighbours per pass is sound.
bool drop_collinear_pass(std::vector<Point>& v) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  std::vector<Point> out;
  out.reserve(n);
  bool changed = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& next = v[(i + 1) % n];
    if (cross(prev, v[i], next) == 0.0) {
      changed = true;
    } else {
      out.push_back(v[i]);
    }
  }
  if (changed) v = std::move(out);
  return changed;
}

void normalize_loop(std::vector<Point>& v) {
  drop_duplicates(v);
  while (v.size() >= 3 && drop_collinear_pass(v)) drop_duplicates(v);
  if (v.size() < 3) throw std::invalid_argument("polygon degenerates to fewer than 3 vertices");
}

bool on_segment_bbox(IPoint a, IPoint b, IPoint q) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool on_segment_bbox(Point a, Point b, Point q) {
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

i128 cross_of(IPoint o, IPoint a, IPoint b) { return icross(o, a, b); }
double cross_of(Point o, Point a, Point b) { return cross(o, a, b); }

// Any shared point between the two segments counts as an intersection.
template <typename P>
bool segments_touch(P a1, P a2, P b1, P b2) {
  const int d1 = sgn(cross_of(b1, b2, a1));
  const int d2 = sgn(cross_of(b1, b2, a2));
  const int d3 = sgn(cross_of(a1, a2, b1));
  const int d4 = sgn(cross_of(a1, a2, b2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment_bbox(b1, b2, a1)) return true;
  if (d2 == 0 && on_segment_bbox(b1, b2, a2)) return true;
  if (d3 == 0 && on_segment_bbox(a1, a2, b1)) return true;
  if (d4 == 0 && on_segment_bbox(a1, a2, b2)) return true;
  return false;
}

template <typename P>
void require_simple(const std::vector<P>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P& a1 = v[i];
    const P& a2 = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // skip the edge itself and the two adjacent edges
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_touch(a1, a2, v[j], v[(j + 1) % n]))
        throw std::invalid_argument("polygon is not simple");
    }
  }
}

// Sutherland-Hodgman against one axis-aligned half-plane. Works for both
// coordinate types; on the rectilinear-integer path the crossing edge is
// always axis-parallel, so the integer division is exact.
template <typename P, typename C>
void clip_halfplane(const std::vector<P>& in, std::vector<P>& out, bool axis_x, C bound,
                    bool keep_ge) {
  out.clear();
  const std::size_t n = in.size();
  if (n < 3) return;
  auto coord = [axis_x](const P& p) { return axis_x ? p.x : p.y; };
  auto hit = [axis_x, bound](const P& a, const P& b) -> P {
    if (axis_x) {
      const C y = static_cast<C>(a.y + (b.y - a.y) * (bound - a.x) / (b.x - a.x));
      return P{bound, y};
    }
    const C x = static_cast<C>(a.x + (b.x - a.x) * (bound - a.y) / (b.y - a.y));
    return P{x, bound};
  };
  P prev = in[n - 1];
  bool prev_in = keep_ge ? (coord(prev) >= bound) : (coord(prev) <= bound);
  for (std::size_t i = 0; i < n; ++i) {
    const P cur = in[i];
    const bool cur_in = keep_ge ? (coord(cur) >= bound) : (coord(cur) <= bound);
    if (cur_in != prev_in) out.push_back(hit(prev, cur));
    if (cur_in) out.push_back(cur);
    prev = cur;
    prev_in = cur_in;
  }
}

// Clips the loop in `a` to the rectangle; result ends up back in `a`.
template <typename P, typename C>
void clip_rect_loop(std::vector<P>& a, std::vector<P>& b, C x0, C y0, C x1, C y1) {
  clip_halfplane(a, b, true, x0, true);
  clip_halfplane(b, a, true, x1, false);
  clip_halfplane(a, b, false, y0, true);
  clip_halfplane(b, a, false, y1, false);
}

i64 doubled_area_int(std::span<const IPoint> v) {
  i128 acc = 0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IPoint& a = v[i];
    const IPoint& b = v[(i + 1 == n) ? 0 : i + 1];
    acc += i128(a.x) * b.y - i128(b.x) * a.y;
  }
  return static_cast<i64>(acc);
}

// area(P n R) for a rectilinear polygon by integrating the clamped vertical
// edges: per horizontal cross-section the clamped crossings telescope to the
// length of P_y n [x0,x1], so no clipping is needed. This is the hot kernel
// of the pruned transform.
i64 rect_clip_area_int(std::span<const IPoint> v, i64 x0, i64 y0, i64 x1, i64 y1) {
  i128 acc = 0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IPoint& a = v[i];
    const IPoint& b = v[(i + 1 == n) ? 0 : i + 1];
    if (a.x != b.x) continue;  // only vertical edges carry the x dy integral
    const i64 lo = std::max(std::min(a.y, b.y), y0);
    const i64 hi = std::min(std::max(a.y, b.y), y1);
    if (lo >= hi) continue;
    const i64 xc = std::clamp(a.x, x0, x1);
    const i64 span = (b.y > a.y) ? (hi - lo) : (lo - hi);
    acc += i128(xc - x0) * span;
  }
  const i64 area = static_cast<i64>(acc);
  return area < 0 ? -area : area;
}

double doubled_area_real(std::span<const Point> v) {
  double acc = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1 == n) ? 0 : i + 1];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc;
}

bool rect_is_integral(const Rect& r) {
  return is_integral(r.x0) && is_integral(r.y0) && is_integral(r.x1) && is_integral(r.y1) &&
         std::abs(r.x0) <= double(kMaxIntegerCoord) && std::abs(r.x1) <= double(kMaxIntegerCoord) &&
         std::abs(r.y0) <= double(kMaxIntegerCoord) && std::abs(r.y1) <= double(kMaxIntegerCoord);
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
  for (const Point& p : verts_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("non-finite coordinate");
  }
  normalize_loop(verts_);

  const double doubled = doubled_area_real(verts_);
  if (doubled == 0.0) throw std::invalid_argument("polygon encloses zero area");
  if (doubled > 0.0) std::reverse(verts_.begin(), verts_.end());  // store clockwise

  auto min_it = std::min_element(verts_.begin(), verts_.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::rotate(verts_.begin(), min_it, verts_.end());

  bool all_int = true;
  bool axis_parallel = true;
  for (std::size_t i = 0, n = verts_.size(); i < n; ++i) {
    const Point& a = verts_[i];
    const Point& b = verts_[(i + 1) % n];
    all_int = all_int && is_integral(a.x) && is_integral(a.y);
    axis_parallel = axis_parallel && (a.x == b.x || a.y == b.y);
  }

  if (all_int && axis_parallel) {
    for (const Point& p : verts_) {
      if (std::abs(p.x) > double(kMaxIntegerCoord) || std::abs(p.y) > double(kMaxIntegerCoord))
        throw std::invalid_argument("integer coordinate exceeds exact-arithmetic range");
    }
    kind_ = PolygonKind::RectilinearInteger;
    iverts_.reserve(verts_.size());
    for (const Point& p : verts_) iverts_.push_back({i64(p.x), i64(p.y)});
  } else {
    kind_ = PolygonKind::GeneralReal;
  }

  // exact predicates whenever coordinates are integers in range, even for
  // non-rectilinear input
  const bool exact_preds =
      all_int && std::all_of(verts_.begin(), verts_.end(), [](const Point& p) {
        return std::abs(p.x) <= double(i64(1) << 30) && std::abs(p.y) <= double(i64(1) << 30);
      });
  if (exact_preds) {
    std::vector<IPoint> iv;
    iv.reserve(verts_.size());
    for (const Point& p : verts_) iv.push_back({i64(p.x), i64(p.y)});
    require_simple(iv);
  } else {
    require_simple(verts_);
  }

  bounds_ = Rect{verts_[0].x, verts_[0].y, verts_[0].x, verts_[0].y};
  for (const Point& p : verts_) {
    bounds_.x0 = std::min(bounds_.x0, p.x);
    bounds_.y0 = std::min(bounds_.y0, p.y);
    bounds_.x1 = std::max(bounds_.x1, p.x);
    bounds_.y1 = std::max(bounds_.y1, p.y);
  }

  if (kind_ == PolygonKind::RectilinearInteger) {
    area_ = double(std::abs(doubled_area_int(iverts_))) * 0.5;
  } else {
    area_ = std::abs(doubled_area_real(verts_)) * 0.5;
  }
}

double signed_area(const Polygon& poly) { return poly.area(); }

bool is_rectilinear(const Polygon& poly) {
  return poly.kind() == PolygonKind::RectilinearInteger;
}

Rect bounding_box(const Polygon& poly) { return poly.bounds(); }

double loop_doubled_area(std::span<const Point> loop) { return doubled_area_real(loop); }

std::vector<Point> clip_to_rect(const Polygon& poly, const Rect& r) {
  std::vector<Point> a = poly.vertices();
  std::vector<Point> b;
  clip_rect_loop(a, b, r.x0, r.y0, r.x1, r.y1);
  if (a.size() < 3 || doubled_area_real(a) == 0.0) return {};
  return a;
}

double intersection_area(const Polygon& poly, const Rect& r, ClipScratch& scratch) {
  const Rect& bb = poly.bounds();
  if (bb.x1 <= r.x0 || bb.x0 >= r.x1 || bb.y1 <= r.y0 || bb.y0 >= r.y1) return 0.0;
  if (r.x0 <= bb.x0 && bb.x1 <= r.x1 && r.y0 <= bb.y0 && bb.y1 <= r.y1) return poly.area();

  if (poly.kind() == PolygonKind::RectilinearInteger && rect_is_integral(r)) {
    return double(
        rect_clip_area_int(poly.int_vertices(), i64(r.x0), i64(r.y0), i64(r.x1), i64(r.y1)));
  }

  scratch.ra = poly.vertices();
  clip_rect_loop(scratch.ra, scratch.rb, r.x0, r.y0, r.x1, r.y1);
  if (scratch.ra.size() < 3) return 0.0;
  return std::abs(doubled_area_real(scratch.ra)) * 0.5;
}

double intersection_area(const Polygon& poly, const Rect& r) {
  ClipScratch scratch;
  return intersection_area(poly, r, scratch);
}

bool point_in_polygon(const Polygon& poly, Point q) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1 == n) ? 0 : i + 1];
    if ((a.y > q.y) != (b.y > q.y)) {
      const double xhit = a.x + (b.x - a.x) * (q.y - a.y) / (b.y - a.y);
      if (q.x < xhit) inside = !inside;
    }
  }
  return inside;
}

}  // namespace polyhaar
