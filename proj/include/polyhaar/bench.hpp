#pragma once

#include <cstdint>
#include <vector>

#include "polyhaar/pattern.hpp"
#include "polyhaar/pattern_io.hpp"
#include "polyhaar/pcht.hpp"

namespace polyhaar {

struct BenchConfig {
  std::vector<std::int64_t> sizes;
  std::vector<SyntheticKind> kinds;
  std::vector<int> counts;
  int repeat = 5;
  std::uint64_t seed = 0;
  bool store_coefficients = false;
};

struct SizeSummary {
  std::int64_t size = 0;
  double mean_speedup = 0.0;
  double ci_low = 0.0;   // 95% normal-approximation interval over patterns
  double ci_high = 0.0;
  int samples = 0;
};

struct BenchOutput {
  std::vector<BenchRecord> rows;
  std::vector<SizeSummary> summaries;
};

const char* synthetic_kind_name(SyntheticKind kind);

// stable seed derivation for one benchmark pattern
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                          std::uint64_t d);

// Median wall-clock nanoseconds over `repeat` runs; the timed region is the
// transform only (the pruned transform works straight off the vertex lists;
// the dense baseline includes building its raster). Coefficients are folded
// into a checksum unless `store` is set.
struct PchtMeasurement {
  std::int64_t median_ns = 0;
  TransformStats stats;
};
PchtMeasurement measure_pcht_ns(const Pattern& pattern, int repeat, bool store);
std::int64_t measure_dht_ns(const Pattern& pattern, int repeat, bool store);

// Runs the full sizes x kinds x counts grid; one pattern per combination.
BenchOutput run_bench(const BenchConfig& config);

}  // namespace polyhaar
