#include "polyhaar/coefficients.hpp"

#include <algorithm>
#include <cmath>

namespace polyhaar {

const char* subband_name(Subband band) {
  switch (band) {
    case Subband::HL: return "hl";
    case Subband::LH: return "lh";
    case Subband::HH: return "hh";
  }
  return "?";
}

void CoefficientSet::purge_zeros() {
  std::erase_if(details_, [](const auto& kv) { return kv.second == 0.0; });
}

double max_abs_difference(const CoefficientSet& a, const CoefficientSet& b) {
  double worst = std::abs(a.dc() - b.dc());
  auto ia = a.details().begin();
  auto ib = b.details().begin();
  while (ia != a.details().end() || ib != b.details().end()) {
    if (ib == b.details().end() || (ia != a.details().end() && ia->first < ib->first)) {
      worst = std::max(worst, std::abs(ia->second));
      ++ia;
    } else if (ia == a.details().end() || ib->first < ia->first) {
      worst = std::max(worst, std::abs(ib->second));
      ++ib;
    } else {
      worst = std::max(worst, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

}  // namespace polyhaar
