#include <cmath>
#include <vector>

#include "doctest.h"
#include "polyhaar/cht_oracle.hpp"
#include "polyhaar/pcht.hpp"

using namespace polyhaar;

namespace {

Polygon square_at(double x, double y, double side = 1.0) {
  return Polygon({{x, y}, {x, y + side}, {x + side, y + side}, {x + side, y}});
}

Pattern unit_square_pattern() {
  return Pattern(Tile(2, 2, 1), {{square_at(0, 0), 1.0}});
}

double detail_at(const CoefficientSet& cs, Subband band, int level, std::int64_t kx,
                 std::int64_t ky) {
  const auto it = cs.details().find(CoeffIndex{level, band, kx, ky});
  return it == cs.details().end() ? 0.0 : it->second;
}

}  // namespace

// --- the trusted oracle itself, checked against hand-computed values ---

TEST_CASE("oracle: dc of the whole-tile polygon is w*sqrt(TxTy)") {
  const Tile tile(2, 2, 1);
  const Pattern p(tile, {{square_at(0, 0, 2), 3.0}});
  CHECK(cht_inner_product_oracle(p, HaarBasis::dc(), 4) == doctest::Approx(3.0 * 2.0));
}

TEST_CASE("oracle: hl sign pattern in x") {
  // polygon entirely in the right half-tile: <f, hl> = -area / sqrt(TxTy)
  const Tile tile(4, 4, 2);
  const Pattern p(tile, {{square_at(3, 1), 1.0}});
  CHECK(cht_inner_product_oracle(p, HaarBasis::detail(Subband::HL, 0, 0, 0), 8) ==
        doctest::Approx(-1.0 / 4.0));
}

TEST_CASE("oracle: unit square in 2x2 tile") {
  const Pattern p = unit_square_pattern();
  CHECK(cht_inner_product_oracle(p, HaarBasis::detail(Subband::HL, 0, 0, 0), 4) ==
        doctest::Approx(0.5));
  CHECK(cht_inner_product_oracle(p, HaarBasis::detail(Subband::LH, 0, 0, 0), 4) ==
        doctest::Approx(0.5));
  CHECK(cht_inner_product_oracle(p, HaarBasis::detail(Subband::HH, 0, 0, 0), 4) ==
        doctest::Approx(0.5));
  CHECK(cht_inner_product_oracle(p, HaarBasis::dc(), 4) == doctest::Approx(0.5));
}

TEST_CASE("oracle rejects a too-coarse grid") {
  const Pattern p = unit_square_pattern();
  CHECK_THROWS_AS(cht_inner_product_oracle(p, HaarBasis::detail(Subband::HL, 2, 0, 0), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(cht_inner_product_oracle(p, HaarBasis::dc(), 3), std::invalid_argument);
}

// --- the pruned transform against frozen values and the oracle ---

TEST_CASE("pcht: whole-tile polygon prunes at the root") {
  const Tile tile(2, 2, 1);
  const Pattern p(tile, {{square_at(0, 0, 2), 1.0}});
  const auto [cs, stats] = pcht_pattern(p);
  CHECK(cs.dc() == 2.0);  // w * sqrt(TxTy)
  CHECK(cs.detail_count() == 0);
  CHECK(stats.nodes_visited == 1);
  CHECK(stats.pruned_full == 1);
  CHECK(stats.area_calls == stats.nodes_visited);
}

TEST_CASE("pcht: unit square in 2x2 tile") {
  const auto [cs, stats] = pcht_pattern(unit_square_pattern());
  CHECK(cs.dc() == 0.5);
  CHECK(detail_at(cs, Subband::HL, 0, 0, 0) == 0.5);
  CHECK(detail_at(cs, Subband::LH, 0, 0, 0) == 0.5);
  CHECK(detail_at(cs, Subband::HH, 0, 0, 0) == 0.5);
  CHECK(cs.detail_count() == 3);

  CHECK(stats.nodes_visited == 5);  // root + 4 children
  CHECK(stats.pruned_full == 1);
  CHECK(stats.pruned_empty == 3);
  CHECK(stats.leaf_terminations == 0);
  CHECK(stats.area_calls == 5);
}

TEST_CASE("pcht: polygon disjoint from the queried cell") {
  const Tile tile(4, 4, 2);
  CoefficientSet cs;
  TransformStats stats;
  const double r = pcht_polygon(square_at(0, 0), tile, 1, 1, 1, 0.25, cs, stats);
  CHECK(r == 0.0);
  CHECK(cs.detail_count() == 0);
  CHECK(stats.nodes_visited == 1);
  CHECK(stats.pruned_empty == 1);
}

TEST_CASE("pcht: empty pattern") {
  const auto [cs, stats] = pcht_pattern(Pattern(Tile(4, 4, 2), {}));
  CHECK(cs.dc() == 0.0);
  CHECK(cs.detail_count() == 0);
  CHECK(stats.nodes_visited == 0);
}

TEST_CASE("pcht: linearity across weighted sub-patterns") {
  const Tile tile(2, 2, 1);
  const Polygon a = square_at(0, 0);
  const Polygon b = square_at(1, 1);
  const auto mixed = pcht_pattern(Pattern(tile, {{a, 0.3}, {b, 0.7}})).coefficients;
  const auto only_a = pcht_pattern(Pattern(tile, {{a, 1.0}})).coefficients;
  const auto only_b = pcht_pattern(Pattern(tile, {{b, 1.0}})).coefficients;

  CHECK(mixed.dc() ==
        doctest::Approx(0.3 * only_a.dc() + 0.7 * only_b.dc()).epsilon(1e-12));
  for (const auto& [idx, value] : mixed.details()) {
    const double expect = 0.3 * detail_at(only_a, idx.band, idx.level, idx.kx, idx.ky) +
                          0.7 * detail_at(only_b, idx.band, idx.level, idx.kx, idx.ky);
    CHECK(value == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("pcht: root return telescopes to the polygon area") {
  const Tile tile(64, 64, 6);
  const Pattern p = generate_synthetic(SyntheticKind::RandomRectilinear, tile, 5, 17);
  for (const auto& item : p.items()) {
    CoefficientSet cs;
    TransformStats stats;
    const double root = pcht_polygon(item.polygon, tile, 0, 0, 0, 1.0 / 64.0, cs, stats);
    CHECK(root == item.polygon.area());
  }
}

TEST_CASE("pcht matches the oracle on random rectilinear patterns") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Tile tile(32, 32, 5);
    const SyntheticKind kind =
        seed % 2 ? SyntheticKind::ContactArray : SyntheticKind::RandomRectilinear;
    const Pattern p = generate_synthetic(kind, tile, 6, seed);
    const auto [cs, stats] = pcht_pattern(p);
    const CoefficientSet oracle = cht_oracle_all(p, 32);

    CHECK(std::abs(cs.dc() - oracle.dc()) <= 1e-9);
    // identical sparsity: every oracle zero is absent, every nonzero matches
    CHECK(cs.detail_count() == oracle.detail_count());
    for (const auto& [idx, value] : oracle.details()) {
      CHECK(std::abs(value - detail_at(cs, idx.band, idx.level, idx.kx, idx.ky)) <= 1e-9);
    }
    CHECK(max_abs_difference(cs, oracle) <= 1e-9);

    // dense-tree bound per polygon
    const std::uint64_t dense_bound =
        ((std::uint64_t(1) << (2 * (tile.depth() + 1))) - 1) / 3;
    CHECK(stats.nodes_visited <= p.polygon_count() * dense_bound);
    CHECK(stats.area_calls == stats.nodes_visited);
    CHECK(stats.pruned_empty + stats.pruned_full + stats.leaf_terminations <=
          stats.nodes_visited);
  }
}

TEST_CASE("pcht: pruning soundness") {
  // a cell fully inside the polygon: every coefficient of that subtree is
  // zero in the oracle
  const Tile tile(8, 8, 3);
  const Pattern p(tile, {{square_at(0, 0, 4), 1.0}});  // covers cell (1,0,0) fully
  const CoefficientSet oracle = cht_oracle_all(p, 8);
  for (const auto& [idx, value] : oracle.details()) {
    if (idx.level >= 1) {
      const std::int64_t scale = std::int64_t(1) << (idx.level - 1);
      const bool inside_subtree = idx.kx < scale && idx.ky < scale;
      CHECK((!inside_subtree || value == 0.0));
    }
  }
  // and the transform never visits below it
  const auto [cs, stats] = pcht_pattern(p);
  CHECK(max_abs_difference(cs, oracle) <= 1e-9);
  CHECK(stats.nodes_visited == 5);  // root + 4 children, all pruned
}

TEST_CASE("pcht: parseval at full depth") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Tile tile(32, 32, 5);
    const Pattern p = generate_synthetic(SyntheticKind::RandomRectilinear, tile, 5, seed + 40);
    const auto cs = pcht_pattern(p).coefficients;
    double energy = cs.dc() * cs.dc();
    for (const auto& [idx, value] : cs.details()) energy += value * value;
    CHECK(energy == doctest::Approx(pattern_energy(p)).epsilon(1e-9));
  }
}

TEST_CASE("pcht: general-real polygon agrees with the oracle") {
  const Tile tile(4, 4, 2);
  const Polygon tri({{0.5, 0.5}, {0.5, 2.5}, {2.5, 0.5}});
  const Pattern p(tile, {{tri, 1.0}});
  const auto cs = pcht_pattern(p).coefficients;
  const CoefficientSet oracle = cht_oracle_all(p, 16);
  CHECK(max_abs_difference(cs, oracle) <= 1e-9);
}

TEST_CASE("pcht: non-square tile agrees with the oracle") {
  const Tile tile(8, 4, 2);  // cells are 2x1 at full depth
  const Pattern p(tile, {{square_at(1, 1, 2), 1.0}, {square_at(5, 0, 1), -0.5}});
  const auto cs = pcht_pattern(p).coefficients;
  const CoefficientSet oracle = cht_oracle_all(p, 8);
  CHECK(max_abs_difference(cs, oracle) <= 1e-9);
  CHECK(cs.dc() == doctest::Approx((4.0 - 0.5) / std::sqrt(32.0)));
}

TEST_CASE("pcht: truncated depth stops at partially covered leaves") {
  const Tile tile(64, 64, 3);  // cells are 8x8, far coarser than the content
  const Pattern p = generate_synthetic(SyntheticKind::RandomRectilinear, tile, 5, 3);
  const auto [cs, stats] = pcht_pattern(p);
  CHECK(stats.leaf_terminations > 0);
  // levels above the cut are still exact inner products
  const CoefficientSet oracle = cht_oracle_all(p, 64);
  CHECK(max_abs_difference(cs, oracle) <= 1e-9);
}

TEST_CASE("pcht: depth-31 guard") {
  CHECK_THROWS_AS(Tile(1 << 20, 1 << 20, 31), std::invalid_argument);
}
