#pragma once

#include <cstdint>

#include "polyhaar/coefficients.hpp"
#include "polyhaar/pattern.hpp"

namespace polyhaar {

// One 2D Haar basis function: either the root scaling function (DC) or a
// detail function identified by (band, level, kx, ky).
struct HaarBasis {
  bool is_dc = true;
  Subband band = Subband::HL;
  int level = 0;
  std::int64_t kx = 0;
  std::int64_t ky = 0;

  static HaarBasis dc() { return HaarBasis{}; }
  static HaarBasis detail(Subband band, int level, std::int64_t kx, std::int64_t ky) {
    return HaarBasis{false, band, level, kx, ky};
  }
};

// Trusted slow reference: evaluates <f, basis> by exact per-cell coverage
// on a resolution x resolution grid. Deliberately shares no butterfly code
// with the recursive transform. `resolution` must be a power of two and
// fine enough to resolve the basis sign pattern (>= 2^(level+1) for a
// detail function); throws std::invalid_argument otherwise.
double cht_inner_product_oracle(const Pattern& pattern, const HaarBasis& basis, int resolution);

// Same evaluation for every basis function up to the tile depth, sharing
// one coverage grid. Exact zeros are not stored.
CoefficientSet cht_oracle_all(const Pattern& pattern, int resolution);

}  // namespace polyhaar
