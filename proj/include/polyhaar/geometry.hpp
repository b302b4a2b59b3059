#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polyhaar {

// Planar point. Coordinates are integer units on the exact rectilinear
// path and arbitrary reals on the general path.
struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct IPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const IPoint&, const IPoint&) = default;
};

// Axis-aligned rectangle, half-open [x0,x1) x [y0,y1).
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class PolygonKind { RectilinearInteger, GeneralReal };

// Coordinate magnitude limit on the exact integer path. Keeps doubled
// shoelace areas of tile-bounded polygons exactly representable both in
// int64 and in double, so empty/full area tests can use ==.
inline constexpr std::int64_t kMaxIntegerCoord = std::int64_t(1) << 26;

// Simple closed polygon. Construction normalizes the vertex loop
// (consecutive duplicates and collinear vertices removed, clockwise
// orientation, lexicographically smallest vertex first) and throws
// std::invalid_argument on degenerate or self-intersecting input.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }

  // Non-empty only when kind() == RectilinearInteger.
  std::span<const IPoint> int_vertices() const { return iverts_; }

  PolygonKind kind() const { return kind_; }
  const Rect& bounds() const { return bounds_; }
  double area() const { return area_; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> verts_;
  std::vector<IPoint> iverts_;
  Rect bounds_{};
  double area_ = 0.0;
  PolygonKind kind_ = PolygonKind::GeneralReal;
};

// Reusable clip buffers; one instance per transform call keeps the hot
// recursion allocation-free.
struct ClipScratch {
  std::vector<Point> ra, rb;
};

// Enclosed area, >= 0 after orientation normalization. Exact on the
// rectilinear-integer path.
double signed_area(const Polygon& poly);

// True iff every edge is axis-parallel and all coordinates are integers.
bool is_rectilinear(const Polygon& poly);

// Smallest axis-aligned rectangle containing all vertices.
Rect bounding_box(const Polygon& poly);

// Sutherland-Hodgman clip against the rectangle. The returned loop may
// contain degenerate zero-area corridors for non-convex subjects; its
// enclosed area always equals area(poly n r). Empty when that area is 0.
std::vector<Point> clip_to_rect(const Polygon& poly, const Rect& r);

// Exact area of poly n r. Bounding-box fast paths skip the clip entirely
// for disjoint and fully-contained cases; rectilinear-integer polygons
// against integer rectangles are evaluated in exact integer arithmetic.
double intersection_area(const Polygon& poly, const Rect& r);
double intersection_area(const Polygon& poly, const Rect& r, ClipScratch& scratch);

// Crossing-parity test, half-open boundary convention (left/bottom edges
// count as inside, right/top as outside).
bool point_in_polygon(const Polygon& poly, Point p);

// Signed doubled shoelace area of a raw loop (positive = counter-clockwise).
double loop_doubled_area(std::span<const Point> loop);

}  // namespace polyhaar
