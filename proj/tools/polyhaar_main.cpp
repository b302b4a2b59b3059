// polyhaar CLI: transforms of polygonal patterns, synthetic layout
// generation, and the runtime benchmark.
//
// exit codes: 0 success, 1 verification mismatch, 2 parse/validation
// failure, 3 I/O failure

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyhaar/bench.hpp"
#include "polyhaar/cht_oracle.hpp"
#include "polyhaar/dht.hpp"
#include "polyhaar/pattern_io.hpp"
#include "polyhaar/pcht.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

using polyhaar::Pattern;
using polyhaar::Tile;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buf.str();
}

// parse + optional depth override + optional validation; exits via return
// code on failure
std::optional<Pattern> load_pattern(const std::string& path, std::optional<int> depth,
                                    bool validate_flag, int& exit_code) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    exit_code = kExitIo;
    return std::nullopt;
  }
  std::optional<Pattern> pattern;
  try {
    pattern = polyhaar::parse_pattern(*text);
    if (depth) {
      const Tile tile(pattern->tile().tx(), pattern->tile().ty(), *depth);
      auto items = pattern->items();  // copy before emplace destroys the source
      pattern.emplace(tile, std::move(items));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    exit_code = kExitInvalid;
    return std::nullopt;
  }
  if (validate_flag) {
    const auto violations = polyhaar::validate(*pattern);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "error: " << v.describe() << "\n";
      exit_code = kExitInvalid;
      return std::nullopt;
    }
  }
  return pattern;
}

int write_coefficient_file(const polyhaar::CoefficientSet& coefficients,
                           const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  try {
    polyhaar::write_coefficients(coefficients, out);
    out.flush();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!out) {
    std::cerr << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return 0;
}

int cmd_transform(const std::string& input, const std::string& output, std::optional<int> depth,
                  bool validate_flag) {
  int code = 0;
  const auto pattern = load_pattern(input, depth, validate_flag, code);
  if (!pattern) return code;
  const polyhaar::PchtResult result = polyhaar::pcht_pattern(*pattern);
  return write_coefficient_file(result.coefficients, output);
}

int cmd_dht(const std::string& input, const std::string& output, std::optional<int> depth,
            polyhaar::RasterMode mode, bool validate_flag) {
  int code = 0;
  const auto pattern = load_pattern(input, depth, validate_flag, code);
  if (!pattern) return code;
  const polyhaar::Raster raster = polyhaar::rasterize(*pattern, mode);
  return write_coefficient_file(polyhaar::dht_transform(raster, pattern->tile()), output);
}

int cmd_verify(const std::string& input, std::optional<int> depth) {
  int code = 0;
  const auto pattern = load_pattern(input, depth, false, code);
  if (!pattern) return code;

  const polyhaar::CoefficientSet pruned = polyhaar::pcht_pattern(*pattern).coefficients;
  const polyhaar::Raster raster = polyhaar::rasterize(*pattern, polyhaar::RasterMode::ExactCoverage);
  const polyhaar::CoefficientSet dense = polyhaar::dht_transform(raster, pattern->tile());

  const double max_diff = polyhaar::max_abs_difference(pruned, dense);
  if (max_diff <= 1e-9) {
    std::printf("max |delta| = %.17g\n", max_diff);
    return 0;
  }

  std::printf("mismatch: max |delta| = %.17g\n", max_diff);
  int shown = 0;
  auto report = [&shown](const char* name, double a, double b) {
    if (shown >= 10 || a == b) return;
    std::printf("  %s: pruned=%.17g dense=%.17g delta=%.3g\n", name, a, b, std::abs(a - b));
    ++shown;
  };
  report("dc", pruned.dc(), dense.dc());
  auto ia = pruned.details().begin();
  auto ib = dense.details().begin();
  while ((ia != pruned.details().end() || ib != dense.details().end()) && shown < 10) {
    polyhaar::CoeffIndex idx;
    double va = 0.0, vb = 0.0;
    if (ib == dense.details().end() ||
        (ia != pruned.details().end() && ia->first < ib->first)) {
      idx = ia->first;
      va = ia->second;
      ++ia;
    } else if (ia == pruned.details().end() || ib->first < ia->first) {
      idx = ib->first;
      vb = ib->second;
      ++ib;
    } else {
      idx = ia->first;
      va = ia->second;
      vb = ib->second;
      ++ia;
      ++ib;
    }
    char name[96];
    std::snprintf(name, sizeof name, "%s,%d,%lld,%lld", polyhaar::subband_name(idx.band),
                  idx.level, static_cast<long long>(idx.kx), static_cast<long long>(idx.ky));
    report(name, va, vb);
  }
  return kExitMismatch;
}

int cmd_gen(polyhaar::SyntheticKind kind, int count, std::int64_t size, std::uint64_t seed,
            const std::string& output) {
  std::optional<Pattern> pattern;
  try {
    const Tile tile(size, size, Tile::default_depth(size, size));
    pattern = polyhaar::generate_synthetic(kind, tile, count, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << output << " for writing\n";
    return kExitIo;
  }
  const std::string text = polyhaar::serialize_pattern(*pattern);
  out.write(text.data(), std::streamsize(text.size()));
  out.flush();
  if (!out) {
    std::cerr << "error: write to " << output << " failed\n";
    return kExitIo;
  }
  return 0;
}

int cmd_bench(const polyhaar::BenchConfig& config, const std::string& output) {
  polyhaar::BenchOutput result;
  try {
    result = polyhaar::run_bench(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << output << " for writing\n";
    return kExitIo;
  }
  try {
    polyhaar::write_bench_rows(result.rows, out);
    out.flush();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  if (!out) return kExitIo;
  for (const auto& s : result.summaries) {
    std::printf("size %lld: mean speedup %.3f, 95%% CI [%.3f, %.3f], n=%d\n",
                static_cast<long long>(s.size), s.mean_speedup, s.ci_low, s.ci_high, s.samples);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous and discrete 2D Haar transforms of weighted polygonal patterns"};
  app.require_subcommand(1);

  const std::map<std::string, polyhaar::SyntheticKind> kind_map{
      {"contact-array", polyhaar::SyntheticKind::ContactArray},
      {"random-rectilinear", polyhaar::SyntheticKind::RandomRectilinear}};
  const std::map<std::string, polyhaar::RasterMode> mode_map{
      {"binary-sample", polyhaar::RasterMode::BinarySample},
      {"exact-coverage", polyhaar::RasterMode::ExactCoverage}};

  // transform
  auto* transform = app.add_subcommand("transform", "pruned continuous transform of a pattern");
  std::string tr_in, tr_out;
  std::optional<int> tr_depth;
  bool tr_validate = false;
  transform->add_option("input", tr_in, "pattern file")->required();
  transform->add_option("output", tr_out, "coefficient file")->required();
  transform->add_option("--depth", tr_depth, "override the tile depth");
  transform->add_flag("--validate", tr_validate, "check disjointness and tile containment first");

  // dht
  auto* dht = app.add_subcommand("dht", "rasterizing discrete transform of a pattern");
  std::string dht_in, dht_out;
  std::optional<int> dht_depth;
  bool dht_validate = false;
  polyhaar::RasterMode dht_mode = polyhaar::RasterMode::ExactCoverage;
  dht->add_option("input", dht_in, "pattern file")->required();
  dht->add_option("output", dht_out, "coefficient file")->required();
  dht->add_option("--depth", dht_depth, "override the tile depth");
  dht->add_option("--mode", dht_mode, "sampling rule (default exact-coverage)")
      ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
  dht->add_flag("--validate", dht_validate, "check disjointness and tile containment first");

  // verify
  auto* verify = app.add_subcommand("verify",
                                    "check that both transforms agree on a pattern");
  std::string vf_in;
  std::optional<int> vf_depth;
  verify->add_option("input", vf_in, "pattern file")->required();
  verify->add_option("--depth", vf_depth, "override the tile depth");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic pattern");
  polyhaar::SyntheticKind gen_kind = polyhaar::SyntheticKind::ContactArray;
  int gen_count = 16;
  std::int64_t gen_size = 1024;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "contact-array or random-rectilinear")
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
  gen->add_option("--count", gen_count, "number of polygons");
  gen->add_option("--size", gen_size, "tile side (power of two)");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("output", gen_out, "pattern file to write")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "runtime comparison of the two transforms");
  polyhaar::BenchConfig config;
  config.sizes = {1024};
  config.counts = {16};
  config.kinds = {polyhaar::SyntheticKind::ContactArray};
  std::string bench_out;
  bench->add_option("--sizes", config.sizes, "tile sides (powers of two)")->delimiter(',');
  bench->add_option("--kinds", config.kinds, "pattern kinds")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
  bench->add_option("--counts", config.counts, "polygon counts")->delimiter(',');
  bench->add_option("--repeat", config.repeat, "repetitions per measurement (default 5)");
  bench->add_option("--seed", config.seed, "base seed");
  bench->add_flag("--store-coefficients", config.store_coefficients,
                  "store outputs instead of folding them into a checksum");
  bench->add_option("output", bench_out, "CSV file to write")->required();

  CLI11_PARSE(app, argc, argv);

  if (transform->parsed()) return cmd_transform(tr_in, tr_out, tr_depth, tr_validate);
  if (dht->parsed()) return cmd_dht(dht_in, dht_out, dht_depth, dht_mode, dht_validate);
  if (verify->parsed()) return cmd_verify(vf_in, vf_depth);
  if (gen->parsed()) return cmd_gen(gen_kind, gen_count, gen_size, gen_seed, gen_out);
  if (bench->parsed()) return cmd_bench(config, bench_out);
  return 0;
}
