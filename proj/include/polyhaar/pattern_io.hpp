#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyhaar/coefficients.hpp"
#include "polyhaar/pattern.hpp"

namespace polyhaar {

enum class ParseErrorKind { Syntax, BadTile, BadPolygon };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

// Line-oriented text format, '#' starts a comment:
//   tile <Tx> <Ty> <J>
//   poly <weight> <x0> <y0> <x1> <y1> ...   (even coordinate count >= 6)
// All-integer coordinates put the polygon on the exact rectilinear path
// when its edges are axis-parallel.
Pattern parse_pattern(std::string_view text);

// Canonical form: clockwise orientation, lexicographically smallest vertex
// first, integers printed without a decimal point. parse(serialize(p)) == p.
std::string serialize_pattern(const Pattern& pattern);

// "dc,<value>" then one "<subband>,<level>,<kx>,<ky>,<value>" line per
// nonzero detail, sorted by (level, subband, kx, ky), 17 significant
// digits. Returns bytes written.
std::size_t write_coefficients(const CoefficientSet& coefficients, std::ostream& sink);

struct BenchRecord {
  std::int64_t tile_size = 0;
  std::string pattern_id;
  std::uint64_t vertex_count = 0;   // K
  std::uint64_t polygon_count = 0;  // M
  std::int64_t pcht_ns = 0;
  std::int64_t dht_ns = 0;
  double speedup = 0.0;  // dht_ns / pcht_ns
  std::uint64_t nodes_visited = 0;
};

// CSV with header tile_size,pattern_id,K,M,pcht_ns,dht_ns,speedup,nodes_visited.
// Returns bytes written.
std::size_t write_bench_rows(std::span<const BenchRecord> rows, std::ostream& sink);

}  // namespace polyhaar
