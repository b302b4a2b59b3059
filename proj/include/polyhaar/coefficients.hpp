#pragma once

#include <compare>
#include <cstdint>
#include <map>

namespace polyhaar {

// Detail subbands, named by the basis used along x then y (h = wavelet,
// l = scaling).
enum class Subband : std::uint8_t { HL = 0, LH = 1, HH = 2 };

const char* subband_name(Subband band);

struct CoeffIndex {
  int level = 0;
  Subband band = Subband::HL;
  std::int64_t kx = 0;
  std::int64_t ky = 0;

  // declaration order gives the canonical (level, band, kx, ky) sort
  friend auto operator<=>(const CoeffIndex&, const CoeffIndex&) = default;
};

// Sparse store for the transform output: the DC term plus all nonzero
// detail coefficients. Canonical form holds no exact zeros.
class CoefficientSet {
 public:
  double dc() const { return dc_; }
  void set_dc(double v) { dc_ = v; }

  void add(Subband band, int level, std::int64_t kx, std::int64_t ky, double value) {
    if (value == 0.0) return;
    details_[CoeffIndex{level, band, kx, ky}] += value;
  }

  // drops exact zeros produced by cancellation across polygons
  void purge_zeros();

  const std::map<CoeffIndex, double>& details() const { return details_; }
  std::size_t detail_count() const { return details_.size(); }

  friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;

 private:
  double dc_ = 0.0;
  std::map<CoeffIndex, double> details_;
};

// max over the DC term and the union of detail indices of |a - b|
double max_abs_difference(const CoefficientSet& a, const CoefficientSet& b);

}  // namespace polyhaar
