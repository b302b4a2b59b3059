#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "polyhaar/geometry.hpp"
#include "polyhaar/pattern.hpp"

using namespace polyhaar;

namespace {

Polygon make(std::vector<Point> pts) { return Polygon(std::move(pts)); }

Polygon unit_square() { return make({{0, 0}, {0, 1}, {1, 1}, {1, 0}}); }

Polygon l_shape() {
  return make({{0, 0}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}});
}

Polygon triangle_202() { return make({{0, 0}, {0, 2}, {2, 0}}); }

// brute-force oracle: counts 1x1 cells of r whose center lies inside the
// polygon; exact coverage for integer rectilinear inputs
double covered_cell_area(const Polygon& poly, const Rect& r) {
  double covered = 0.0;
  for (std::int64_t y = std::int64_t(r.y0); y < std::int64_t(r.y1); ++y) {
    for (std::int64_t x = std::int64_t(r.x0); x < std::int64_t(r.x1); ++x) {
      if (point_in_polygon(poly, {x + 0.5, y + 0.5})) covered += 1.0;
    }
  }
  return covered;
}

std::vector<Polygon> sample_polygons(std::uint64_t seed, int count) {
  const Tile tile(64, 64, 6);
  std::vector<Polygon> out;
  const Pattern a = generate_synthetic(SyntheticKind::RandomRectilinear, tile, count, seed);
  for (const auto& item : a.items()) out.push_back(item.polygon);
  return out;
}

}  // namespace

TEST_CASE("signed_area basics") {
  CHECK(signed_area(unit_square()) == 1.0);
  CHECK(signed_area(triangle_202()) == 2.0);
  CHECK(signed_area(l_shape()) == 3.0);
}

TEST_CASE("is_rectilinear") {
  CHECK(is_rectilinear(unit_square()));
  CHECK_FALSE(is_rectilinear(triangle_202()));
  CHECK(is_rectilinear(l_shape()));
  // half-integer coordinates leave the exact path even with axis-parallel edges
  CHECK_FALSE(is_rectilinear(make({{0, 0}, {0, 1.5}, {1, 1.5}, {1, 0}})));
}

TEST_CASE("bounding_box") {
  CHECK(bounding_box(unit_square()) == Rect{0, 0, 1, 1});
  CHECK(bounding_box(l_shape()) == Rect{0, 0, 2, 2});
  CHECK(bounding_box(make({{1, 1}, {1, 3}, {4, 1}})) == Rect{1, 1, 4, 3});
}

TEST_CASE("construction normalizes and validates") {
  // orientation + start vertex are canonical
  const Polygon cw = unit_square();
  const Polygon ccw = make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(cw == ccw);
  CHECK(cw.vertices()[0] == Point{0, 0});

  // duplicate and collinear vertices are dropped
  const Polygon messy = make({{0, 0}, {0, 0.5}, {0, 1}, {1, 1}, {1, 1}, {1, 0}});
  CHECK(messy == unit_square());

  CHECK_THROWS_AS(make({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);  // zero area
  CHECK_THROWS_AS(make({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), std::invalid_argument);  // bowtie
  // edges touching at a non-adjacent vertex
  CHECK_THROWS_AS(make({{0, 0}, {0, 2}, {2, 2}, {2, 4}, {4, 4}, {4, 0}, {2, 0}, {2, 2}}),
                  std::invalid_argument);
}

TEST_CASE("clip_to_rect examples") {
  const Rect big{0, 0, 4, 4};
  const auto inside = clip_to_rect(unit_square(), big);
  CHECK(std::abs(loop_doubled_area(inside)) * 0.5 == 1.0);

  CHECK(clip_to_rect(unit_square(), Rect{2, 2, 3, 3}).empty());

  const Rect corner{0, 0, 1, 1};
  const auto clipped = clip_to_rect(l_shape(), corner);
  const double area = std::abs(loop_doubled_area(clipped)) * 0.5;
  CHECK(area == covered_cell_area(l_shape(), corner));
  CHECK(area == 1.0);
}

TEST_CASE("intersection_area examples") {
  CHECK(intersection_area(unit_square(), Rect{0, 0, 1, 1}) == 1.0);
  CHECK(intersection_area(unit_square(), Rect{5, 5, 6, 6}) == 0.0);
  const Rect right{1, 0, 2, 2};
  CHECK(intersection_area(l_shape(), right) == covered_cell_area(l_shape(), right));
  CHECK(intersection_area(l_shape(), right) == 1.0);
}

TEST_CASE("intersection_area matches clip-then-area including fast paths") {
  const auto polys = sample_polygons(21, 12);
  std::mt19937_64 rng(99);
  for (const Polygon& poly : polys) {
    for (int t = 0; t < 40; ++t) {
      const std::int64_t x0 = std::int64_t(rng() % 64);
      const std::int64_t y0 = std::int64_t(rng() % 64);
      const std::int64_t w = 1 + std::int64_t(rng() % 32);
      const std::int64_t h = 1 + std::int64_t(rng() % 32);
      const Rect r{double(x0), double(y0), double(x0 + w), double(y0 + h)};
      const auto loop = clip_to_rect(poly, r);
      const double via_clip = std::abs(loop_doubled_area(loop)) * 0.5;
      const double direct = intersection_area(poly, r);
      CHECK(direct == via_clip);
      CHECK(direct >= 0.0);
      CHECK(direct <= std::min(poly.area(), r.area()));
      CHECK(direct == covered_cell_area(poly, r));  // rectilinear exactness
    }
  }
}

TEST_CASE("area conservation under dyadic split") {
  const auto polys = sample_polygons(7, 10);
  std::mt19937_64 rng(5);
  for (const Polygon& poly : polys) {
    for (int t = 0; t < 20; ++t) {
      const std::int64_t x0 = std::int64_t(rng() % 48);
      const std::int64_t y0 = std::int64_t(rng() % 48);
      const std::int64_t w = 2 * (1 + std::int64_t(rng() % 8));
      const std::int64_t h = 2 * (1 + std::int64_t(rng() % 8));
      const Rect r{double(x0), double(y0), double(x0 + w), double(y0 + h)};
      const double mx = double(x0 + w / 2);
      const double my = double(y0 + h / 2);
      const double whole = intersection_area(poly, r);
      const double parts = intersection_area(poly, Rect{r.x0, r.y0, mx, my}) +
                           intersection_area(poly, Rect{mx, r.y0, r.x1, my}) +
                           intersection_area(poly, Rect{r.x0, my, mx, r.y1}) +
                           intersection_area(poly, Rect{mx, my, r.x1, r.y1});
      CHECK(whole == parts);  // exact on the integer path
    }
  }
}

TEST_CASE("area conservation under dyadic split, real path") {
  // shrink an integer polygon onto the half-grid to force the real path
  const auto polys = sample_polygons(13, 8);
  for (const Polygon& base : polys) {
    std::vector<Point> scaled;
    for (const Point& p : base.vertices()) scaled.push_back({p.x * 0.53, p.y * 0.53});
    const Polygon poly(scaled);
    REQUIRE(poly.kind() == PolygonKind::GeneralReal);
    const Rect r{0, 0, 34, 34};
    const double whole = intersection_area(poly, r);
    const double parts = intersection_area(poly, Rect{0, 0, 17, 17}) +
                         intersection_area(poly, Rect{17, 0, 34, 17}) +
                         intersection_area(poly, Rect{0, 17, 17, 34}) +
                         intersection_area(poly, Rect{17, 17, 34, 34});
    CHECK(whole == doctest::Approx(parts).epsilon(1e-9));
  }
}

TEST_CASE("orientation invariance") {
  const auto polys = sample_polygons(3, 10);
  for (const Polygon& poly : polys) {
    std::vector<Point> reversed(poly.vertices().rbegin(), poly.vertices().rend());
    const Polygon flipped(reversed);
    CHECK(flipped == poly);
    CHECK(signed_area(flipped) == signed_area(poly));
    const Rect r{8, 8, 24, 24};
    CHECK(intersection_area(flipped, r) == intersection_area(poly, r));
  }
}

TEST_CASE("degenerate touching contributes zero area") {
  // polygon edge exactly on the rectangle boundary
  CHECK(intersection_area(unit_square(), Rect{1, 0, 2, 1}) == 0.0);
  CHECK(intersection_area(unit_square(), Rect{-1, 0, 0, 1}) == 0.0);
  CHECK(intersection_area(unit_square(), Rect{0, 1, 1, 2}) == 0.0);
}

TEST_CASE("negative coordinates") {
  const Polygon tri = make({{-2, -1}, {0, 3}, {2, -1}});
  CHECK(signed_area(tri) == 8.0);
  CHECK(bounding_box(tri) == Rect{-2, -1, 2, 3});
  CHECK(intersection_area(tri, Rect{-2, -1, 2, 3}) == 8.0);
  CHECK(intersection_area(tri, Rect{0, -1, 2, 3}) == 4.0);

  const Polygon box = make({{-4, -4}, {-4, -2}, {-2, -2}, {-2, -4}});
  CHECK(box.kind() == PolygonKind::RectilinearInteger);
  CHECK(intersection_area(box, Rect{-3, -3, 0, 0}) == 1.0);
}

TEST_CASE("integer coordinates beyond the exact range are rejected") {
  const double big = double((std::int64_t(1) << 26) + 2);
  CHECK_THROWS_AS(make({{0, 0}, {0, big}, {big, big}, {big, 0}}), std::invalid_argument);
}
