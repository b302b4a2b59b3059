#include "polyhaar/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "polyhaar/dht.hpp"

namespace polyhaar {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// keeps the folded checksums observable so the timed work cannot be elided
volatile double g_bench_checksum_sink = 0.0;

u64 splitmix64(u64& state) {
  state += 0x9E3779B97F4A7C15ull;
  u64 z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

i64 median_ns(std::vector<i64>& samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  i64 med = (n % 2 == 1) ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
  return std::max<i64>(1, med);
}

template <typename Fn>
i64 time_once_ns(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

}  // namespace

const char* synthetic_kind_name(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::ContactArray: return "contact-array";
    case SyntheticKind::RandomRectilinear: return "random-rectilinear";
  }
  return "?";
}

u64 derive_seed(u64 base, u64 a, u64 b, u64 c, u64 d) {
  u64 state = base;
  splitmix64(state);
  state ^= splitmix64(state) + a;
  state ^= splitmix64(state) + b;
  state ^= splitmix64(state) + c;
  state ^= splitmix64(state) + d;
  return splitmix64(state);
}

PchtMeasurement measure_pcht_ns(const Pattern& pattern, int repeat, bool store) {
  PchtMeasurement result;
  std::vector<i64> samples;
  samples.reserve(std::size_t(repeat));
  double checksum = 0.0;
  // one untimed pass first: the timed repetitions then measure the
  // transform, not first-touch page faults
  checksum += pcht_pattern_fold(pattern).checksum;
  for (int r = 0; r < repeat; ++r) {
    if (store) {
      PchtResult full;
      samples.push_back(time_once_ns([&] { full = pcht_pattern(pattern); }));
      result.stats = full.stats;
      checksum += full.coefficients.dc();
    } else {
      PchtFoldResult fold;
      samples.push_back(time_once_ns([&] { fold = pcht_pattern_fold(pattern); }));
      result.stats = fold.stats;
      checksum += fold.checksum;
    }
  }
  g_bench_checksum_sink = checksum;
  result.median_ns = median_ns(samples);
  return result;
}

i64 measure_dht_ns(const Pattern& pattern, int repeat, bool store) {
  std::vector<i64> samples;
  samples.reserve(std::size_t(repeat));
  double checksum = 0.0;
  // buffers live across repetitions so the timed region covers clearing,
  // filling and transforming the grid rather than the allocator; the
  // untimed first pass also faults the pages in
  Raster raster;
  DhtWorkspace workspace;
  rasterize_into(pattern, RasterMode::BinarySample, raster);
  checksum += dht_transform_fold(raster, pattern.tile(), &workspace).checksum;
  for (int r = 0; r < repeat; ++r) {
    samples.push_back(time_once_ns([&] {
      rasterize_into(pattern, RasterMode::BinarySample, raster);
      if (store) {
        checksum += dht_transform(raster, pattern.tile()).dc();
      } else {
        checksum += dht_transform_fold(raster, pattern.tile(), &workspace).checksum;
      }
    }));
  }
  g_bench_checksum_sink = checksum;
  return median_ns(samples);
}

BenchOutput run_bench(const BenchConfig& config) {
  BenchOutput out;
  u64 ordinal = 0;
  for (const i64 size : config.sizes) {
    for (const SyntheticKind kind : config.kinds) {
      for (const int count : config.counts) {
        const u64 seed = derive_seed(config.seed, u64(size), u64(kind), u64(count), ordinal);
        ++ordinal;
        const Tile tile(size, size, Tile::default_depth(size, size));
        const Pattern pattern = generate_synthetic(kind, tile, count, seed);

        BenchRecord row;
        row.tile_size = size;
        row.pattern_id = std::string(synthetic_kind_name(kind)) + "-c" + std::to_string(count) +
                         "-s" + std::to_string(seed % 100000);
        row.vertex_count = pattern.total_vertex_count();
        row.polygon_count = pattern.polygon_count();

        const PchtMeasurement pcht = measure_pcht_ns(pattern, config.repeat,
                                                     config.store_coefficients);
        row.pcht_ns = pcht.median_ns;
        row.nodes_visited = pcht.stats.nodes_visited;
        row.dht_ns = measure_dht_ns(pattern, config.repeat, config.store_coefficients);
        row.speedup = double(row.dht_ns) / double(row.pcht_ns);
        out.rows.push_back(std::move(row));
      }
    }
  }

  for (const i64 size : config.sizes) {
    SizeSummary summary;
    summary.size = size;
    double sum = 0.0;
    for (const BenchRecord& row : out.rows) {
      if (row.tile_size != size) continue;
      sum += row.speedup;
      ++summary.samples;
    }
    if (summary.samples == 0) continue;
    summary.mean_speedup = sum / summary.samples;
    double var = 0.0;
    for (const BenchRecord& row : out.rows) {
      if (row.tile_size != size) continue;
      const double d = row.speedup - summary.mean_speedup;
      var += d * d;
    }
    if (summary.samples > 1) {
      const double sd = std::sqrt(var / (summary.samples - 1));
      const double half = 1.96 * sd / std::sqrt(double(summary.samples));
      summary.ci_low = summary.mean_speedup - half;
      summary.ci_high = summary.mean_speedup + half;
    } else {
      summary.ci_low = summary.ci_high = summary.mean_speedup;
    }
    out.summaries.push_back(summary);
  }
  return out;
}

}  // namespace polyhaar
