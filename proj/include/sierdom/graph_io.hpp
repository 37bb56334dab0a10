#pragma once

#include <charconv>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"

namespace sierdom {

namespace detail {

/// Splits a line on blanks and parses every token as a non-negative decimal.
/// Returns false on any non-numeric token.
inline bool parse_unsigned_tokens(std::string_view line, std::vector<std::size_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc{} || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

inline bool is_skippable(std::string_view line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

/// Iterates over the meaningful lines of a text, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (!is_skippable(line)) return true;
    }
    return false;
  }

  std::size_t line_number() const noexcept { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

}  // namespace detail

/**
 * Parses the edge-list format:
 *
 *     # comment
 *     n m
 *     u v        (m lines)
 *
 * Blank lines and lines starting with '#' are ignored. Every error names the
 * offending line.
 */
inline Graph parse_graph(std::string_view text) {
  detail::LineReader reader(text);
  std::string_view line;
  std::vector<std::size_t> tokens;

  if (!reader.next(line)) throw ParseError(reader.line_number() + 1, "missing header \"n m\"");
  if (!detail::parse_unsigned_tokens(line, tokens) || tokens.size() != 2)
    throw ParseError(reader.line_number(), "malformed header, expected \"n m\"");
  const std::size_t n = tokens[0];
  const std::size_t m = tokens[1];
  if (n < 1) throw ParseError(reader.line_number(), "vertex count must be at least 1");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  while (edges.size() < m) {
    if (!reader.next(line))
      throw ParseError(reader.line_number() + 1, "expected " + std::to_string(m) +
                                                     " edges, found " + std::to_string(edges.size()));
    const auto at = reader.line_number();
    if (!detail::parse_unsigned_tokens(line, tokens) || tokens.size() != 2)
      throw ParseError(at, "malformed edge, expected \"u v\"");
    auto u = tokens[0], v = tokens[1];
    if (u >= n || v >= n) throw ParseError(at, "vertex index out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(at, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second)
      throw ParseError(at, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(u, v);
  }
  if (reader.next(line)) throw ParseError(reader.line_number(), "unexpected content after last edge");
  return Graph(n, std::move(edges));
}

/// Canonical text form: header then edges sorted by (min, max), no trailing newline.
inline std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size();
  for (auto [u, v] : g.edges()) out << '\n' << u << ' ' << v;
  return out.str();
}

}  // namespace sierdom
