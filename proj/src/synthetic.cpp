#include <algorithm>
#include <cmath>
#include <random>

#include "polyhaar/pattern.hpp"

namespace polyhaar {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

constexpr int kPlacementAttempts = 10000;
constexpr int kOutlineAttempts = 1000;

struct IRect {
  i64 x0, y0, x1, y1;  // half-open
};

bool rects_overlap(IRect a, IRect b) {
  return a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1;
}

// Hand-rolled uniform draw so generated patterns are stable across
// standard-library versions.
u64 draw(std::mt19937_64& rng, u64 n) { return n ? rng() % n : 0; }

// Outline of the union of overlapping integer rectangles, via coordinate
// compression and a covered-on-left boundary walk. Returns an empty loop
// when the union is not a single simply connected region (disconnected,
// holes, or a pinch corner).
std::vector<Point> union_outline(const std::vector<IRect>& rects) {
  std::vector<i64> xs, ys;
  for (const IRect& r : rects) {
    xs.push_back(r.x0);
    xs.push_back(r.x1);
    ys.push_back(r.y0);
    ys.push_back(r.y1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  const int nx = int(xs.size()) - 1;
  const int ny = int(ys.size()) - 1;
  if (nx < 1 || ny < 1) return {};

  std::vector<char> cov(std::size_t(nx) * ny, 0);
  auto cov_at = [&](int i, int j) -> bool {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return false;
    return cov[std::size_t(j) * nx + i] != 0;
  };
  int covered_cells = 0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      for (const IRect& r : rects) {
        if (r.x0 <= xs[i] && xs[i + 1] <= r.x1 && r.y0 <= ys[j] && ys[j + 1] <= r.y1) {
          cov[std::size_t(j) * nx + i] = 1;
          ++covered_cells;
          break;
        }
      }
    }
  }
  if (covered_cells == 0) return {};

  // covered region must be 4-connected
  {
    std::vector<char> seen(cov.size(), 0);
    std::vector<std::pair<int, int>> stack;
    for (int j = 0; j < ny && stack.empty(); ++j)
      for (int i = 0; i < nx; ++i)
        if (cov_at(i, j)) {
          stack.push_back({i, j});
          seen[std::size_t(j) * nx + i] = 1;
          break;
        }
    int reached = 0;
    while (!stack.empty()) {
      auto [i, j] = stack.back();
      stack.pop_back();
      ++reached;
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const int i2 = i + di[d], j2 = j + dj[d];
        if (cov_at(i2, j2) && !seen[std::size_t(j2) * nx + i2]) {
          seen[std::size_t(j2) * nx + i2] = 1;
          stack.push_back({i2, j2});
        }
      }
    }
    if (reached != covered_cells) return {};
  }

  // no holes: every uncovered cell must reach the outside
  {
    const int pw = nx + 2, ph = ny + 2;
    std::vector<char> seen(std::size_t(pw) * ph, 0);
    std::vector<std::pair<int, int>> stack{{0, 0}};  // padded coords
    seen[0] = 1;
    while (!stack.empty()) {
      auto [pi, pj] = stack.back();
      stack.pop_back();
      const int di[4] = {1, -1, 0, 0};
      const int dj[4] = {0, 0, 1, -1};
      for (int d = 0; d < 4; ++d) {
        const int i2 = pi + di[d], j2 = pj + dj[d];
        if (i2 < 0 || j2 < 0 || i2 >= pw || j2 >= ph) continue;
        if (seen[std::size_t(j2) * pw + i2]) continue;
        if (cov_at(i2 - 1, j2 - 1)) continue;
        seen[std::size_t(j2) * pw + i2] = 1;
        stack.push_back({i2, j2});
      }
    }
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        if (!cov_at(i, j) && !seen[std::size_t(j + 1) * (pw) + (i + 1)]) return {};
  }

  int total_edges = 0;
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (cov_at(i, j) != cov_at(i, j - 1)) ++total_edges;
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (cov_at(i, j) != cov_at(i - 1, j)) ++total_edges;

  // start at the SW corner of the bottom-left covered cell, heading +x
  int si = -1, sj = -1;
  for (int j = 0; j < ny && si < 0; ++j)
    for (int i = 0; i < nx; ++i)
      if (cov_at(i, j)) {
        si = i;
        sj = j;
        break;
      }

  // directions: 0=E, 1=N, 2=W, 3=S; covered region stays on the left
  auto edge_valid = [&](int i, int j, int d) -> bool {
    switch (d) {
      case 0: return cov_at(i, j) && !cov_at(i, j - 1);
      case 1: return cov_at(i - 1, j) && !cov_at(i, j);
      case 2: return cov_at(i - 1, j - 1) && !cov_at(i - 1, j);
      default: return cov_at(i, j - 1) && !cov_at(i - 1, j - 1);
    }
  };
  const int dx[4] = {1, 0, -1, 0};
  const int dy[4] = {0, 1, 0, -1};

  std::vector<Point> loop;
  int ci = si, cj = sj, cd = 0;
  int steps = 0;
  while (true) {
    loop.push_back({double(xs[ci]), double(ys[cj])});
    ci += dx[cd];
    cj += dy[cd];
    if (++steps > total_edges) return {};
    if (ci == si && cj == sj) break;
    int nd = -1;
    for (int t : {1, 0, 3}) {  // prefer left turn, then straight, then right
      const int cand = (cd + t) & 3;
      if (edge_valid(ci, cj, cand)) {
        nd = cand;
        break;
      }
    }
    if (nd < 0) return {};
    cd = nd;
  }
  if (steps != total_edges) return {};  // a second boundary loop remains
  return loop;
}

Pattern make_contact_array(const Tile& tile, int count, std::mt19937_64& rng) {
  std::vector<WeightedPolygon> items;
  items.reserve(std::size_t(count));
  if (count == 0) return Pattern(tile, std::move(items));

  i64 grid = 1;
  while (grid * grid < count) ++grid;
  const i64 px = tile.tx() / grid;
  const i64 py = tile.ty() / grid;
  if (px < 2 || py < 2) throw PlacementFailure("contact array pitch below 2 units");
  const i64 side = std::max<i64>(1, std::min(px, py) / 2);

  for (int k = 0; k < count; ++k) {
    const i64 gx = k % grid;
    const i64 gy = k / grid;
    const i64 x0 = gx * px + i64(draw(rng, u64(px - side + 1)));
    const i64 y0 = gy * py + i64(draw(rng, u64(py - side + 1)));
    std::vector<Point> square{{double(x0), double(y0)},
                              {double(x0), double(y0 + side)},
                              {double(x0 + side), double(y0 + side)},
                              {double(x0 + side), double(y0)}};
    items.push_back({Polygon(std::move(square)), 1.0});
  }
  return Pattern(tile, std::move(items));
}

Pattern make_random_rectilinear(const Tile& tile, int count, std::mt19937_64& rng) {
  std::vector<WeightedPolygon> items;
  items.reserve(std::size_t(count));
  const i64 ext = std::max<i64>(2, std::min(tile.tx(), tile.ty()) / 16);
  const i64 span = 2 * ext;  // local sandbox for the rectangle union

  std::vector<IRect> placed_boxes;

  for (int k = 0; k < count; ++k) {
    // build a simple rectilinear outline from 1-4 overlapping rectangles
    std::vector<Point> shape;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= kOutlineAttempts) throw PlacementFailure("could not build a simple outline");
      const int nrects = 1 + int(draw(rng, 4));
      std::vector<IRect> rects;
      auto rand_rect = [&]() -> IRect {
        const i64 w = 1 + i64(draw(rng, u64(ext)));
        const i64 h = 1 + i64(draw(rng, u64(ext)));
        const i64 x = i64(draw(rng, u64(span - w + 1)));
        const i64 y = i64(draw(rng, u64(span - h + 1)));
        return {x, y, x + w, y + h};
      };
      rects.push_back(rand_rect());
      bool ok = true;
      for (int r = 1; r < nrects && ok; ++r) {
        bool joined = false;
        for (int t = 0; t < 50 && !joined; ++t) {
          const IRect cand = rand_rect();
          for (const IRect& prev : rects)
            if (rects_overlap(cand, prev)) {
              rects.push_back(cand);
              joined = true;
              break;
            }
        }
        ok = joined;
      }
      if (!ok) continue;
      std::vector<Point> outline = union_outline(rects);
      if (outline.empty()) continue;
      try {
        Polygon probe(outline);  // rejects pinched outlines
        shape = probe.vertices();
        break;
      } catch (const std::invalid_argument&) {
        continue;
      }
    }

    // normalize the shape to its bbox corner, then place by rejection
    double bx0 = shape[0].x, by0 = shape[0].y, bx1 = shape[0].x, by1 = shape[0].y;
    for (const Point& p : shape) {
      bx0 = std::min(bx0, p.x);
      by0 = std::min(by0, p.y);
      bx1 = std::max(bx1, p.x);
      by1 = std::max(by1, p.y);
    }
    const i64 bw = i64(bx1 - bx0);
    const i64 bh = i64(by1 - by0);

    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
      const i64 ox = i64(draw(rng, u64(tile.tx() - bw + 1)));
      const i64 oy = i64(draw(rng, u64(tile.ty() - bh + 1)));
      const IRect box{ox, oy, ox + bw, oy + bh};
      bool clash = false;
      for (const IRect& other : placed_boxes)
        if (rects_overlap(box, other)) {
          clash = true;
          break;
        }
      if (clash) continue;
      std::vector<Point> verts;
      verts.reserve(shape.size());
      for (const Point& p : shape)
        verts.push_back({p.x - bx0 + double(ox), p.y - by0 + double(oy)});
      items.push_back({Polygon(std::move(verts)), 1.0});
      placed_boxes.push_back(box);
      placed = true;
    }
    if (!placed) throw PlacementFailure("no disjoint placement found");
  }
  return Pattern(tile, std::move(items));
}

}  // namespace

Pattern generate_synthetic(SyntheticKind kind, const Tile& tile, int count, u64 seed) {
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case SyntheticKind::ContactArray: return make_contact_array(tile, count, rng);
    case SyntheticKind::RandomRectilinear: return make_random_rectilinear(tile, count, rng);
  }
  throw std::invalid_argument("unknown synthetic kind");
}

}  // namespace polyhaar
