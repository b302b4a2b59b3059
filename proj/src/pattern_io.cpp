#include "polyhaar/pattern_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace polyhaar {
namespace {

using i64 = std::int64_t;

std::string format_value_17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// integers without a decimal point, everything else shortest round-trip
std::string format_number(double v) {
  if (std::floor(v) == v && std::abs(v) < 9.007199254740992e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<i64> parse_int(std::string_view tok) {
  i64 value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_real(std::string_view tok) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

const char* kind_label(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Syntax: return "SyntaxError";
    case ParseErrorKind::BadTile: return "BadTile";
    case ParseErrorKind::BadPolygon: return "BadPolygon";
  }
  return "ParseError";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : std::runtime_error(std::string(kind_label(kind)) + "(line " + std::to_string(line) +
                         "): " + message),
      kind_(kind),
      line_(line) {}

Pattern parse_pattern(std::string_view text) {
  std::optional<Tile> tile;
  std::vector<WeightedPolygon> items;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++lineno;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::vector<std::string_view> tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "tile") {
      if (tile) throw ParseError(ParseErrorKind::Syntax, lineno, "duplicate tile line");
      if (tokens.size() != 4)
        throw ParseError(ParseErrorKind::Syntax, lineno, "expected: tile <Tx> <Ty> <J>");
      const auto tx = parse_int(tokens[1]);
      const auto ty = parse_int(tokens[2]);
      const auto depth = parse_int(tokens[3]);
      if (!tx || !ty || !depth)
        throw ParseError(ParseErrorKind::Syntax, lineno, "tile fields must be integers");
      try {
        tile.emplace(*tx, *ty, int(*depth));
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::BadTile, lineno, e.what());
      }
    } else if (tokens[0] == "poly") {
      if (!tile)
        throw ParseError(ParseErrorKind::Syntax, lineno, "tile line must precede polygons");
      if (tokens.size() < 2)
        throw ParseError(ParseErrorKind::Syntax, lineno, "expected: poly <weight> <coords...>");
      const auto weight = parse_real(tokens[1]);
      if (!weight) throw ParseError(ParseErrorKind::Syntax, lineno, "bad weight");
      if (!std::isfinite(*weight))
        throw ParseError(ParseErrorKind::BadPolygon, lineno, "weight must be finite");
      const std::size_t ncoords = tokens.size() - 2;
      if (ncoords < 6 || ncoords % 2 != 0)
        throw ParseError(ParseErrorKind::Syntax, lineno,
                         "polygon needs an even coordinate count of at least 6");
      std::vector<Point> verts;
      verts.reserve(ncoords / 2);
      for (std::size_t i = 2; i < tokens.size(); i += 2) {
        const auto x = parse_real(tokens[i]);
        const auto y = parse_real(tokens[i + 1]);
        if (!x || !y) throw ParseError(ParseErrorKind::Syntax, lineno, "bad coordinate");
        verts.push_back({*x, *y});
      }
      try {
        items.push_back({Polygon(std::move(verts)), *weight});
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::BadPolygon, lineno, e.what());
      }
    } else {
      throw ParseError(ParseErrorKind::Syntax, lineno, "unknown directive");
    }
  }

  if (!tile) throw ParseError(ParseErrorKind::Syntax, 1, "missing tile line");
  return Pattern(*tile, std::move(items));
}

std::string serialize_pattern(const Pattern& pattern) {
  std::string out = "tile " + std::to_string(pattern.tile().tx()) + " " +
                    std::to_string(pattern.tile().ty()) + " " +
                    std::to_string(pattern.tile().depth()) + "\n";
  for (const WeightedPolygon& item : pattern.items()) {
    out += "poly " + format_number(item.weight);
    for (const Point& p : item.polygon.vertices()) {
      out += " " + format_number(p.x) + " " + format_number(p.y);
    }
    out += "\n";
  }
  return out;
}

std::size_t write_coefficients(const CoefficientSet& coefficients, std::ostream& sink) {
  std::string out = "dc," + format_value_17(coefficients.dc()) + "\n";
  for (const auto& [index, value] : coefficients.details()) {
    out += subband_name(index.band);
    out += ",";
    out += std::to_string(index.level);
    out += ",";
    out += std::to_string(index.kx);
    out += ",";
    out += std::to_string(index.ky);
    out += ",";
    out += format_value_17(value);
    out += "\n";
  }
  sink.write(out.data(), std::streamsize(out.size()));
  if (!sink) throw std::runtime_error("coefficient write failed");
  return out.size();
}

std::size_t write_bench_rows(std::span<const BenchRecord> rows, std::ostream& sink) {
  std::string out = "tile_size,pattern_id,K,M,pcht_ns,dht_ns,speedup,nodes_visited\n";
  for (const BenchRecord& row : rows) {
    out += std::to_string(row.tile_size);
    out += ",";
    out += row.pattern_id;
    out += ",";
    out += std::to_string(row.vertex_count);
    out += ",";
    out += std::to_string(row.polygon_count);
    out += ",";
    out += std::to_string(row.pcht_ns);
    out += ",";
    out += std::to_string(row.dht_ns);
    out += ",";
    out += format_value_17(row.speedup);
    out += ",";
    out += std::to_string(row.nodes_visited);
    out += "\n";
  }
  sink.write(out.data(), std::streamsize(out.size()));
  if (!sink) throw std::runtime_error("benchmark CSV write failed");
  return out.size();
}

}  // namespace polyhaar
