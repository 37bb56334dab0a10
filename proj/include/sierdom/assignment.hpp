#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/graph_io.hpp"

namespace sierdom {

/// Which domination parameter a labeling is meant for.
enum class Parameter { gamma_r, gamma_dr };

inline std::string_view to_string(Parameter p) {
  return p == Parameter::gamma_r ? "gamma_r" : "gamma_dr";
}

/// Largest value a labeling of the given kind may use.
constexpr int max_value(Parameter p) { return p == Parameter::gamma_r ? 2 : 3; }

/**
 * Vertex labeling f: V -> {0,1,2,3} (double Roman) or {0,1,2} (Roman).
 *
 * The partition view (V0,V1,V2,V3) is derived from the values on demand.
 */
class Assignment {
 public:
  Assignment(Parameter kind, std::vector<std::uint8_t> values) : kind_(kind), values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v)
      if (values_[v] > max_value(kind_))
        throw KindError("value " + std::to_string(values_[v]) + " at vertex " + std::to_string(v) +
                        " is not allowed for " + std::string(to_string(kind_)));
  }

  static Assignment zeros(Parameter kind, std::size_t n) { return {kind, std::vector<std::uint8_t>(n, 0)}; }

  Parameter kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](Vertex v) const { return values_.at(v); }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }

  /// V_i = { v : f(v) = i }.
  VertexSet part(int value) const {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < values_.size(); ++v)
      if (values_[v] == value) members.push_back(v);
    return VertexSet(std::move(members));
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  Parameter kind_;
  std::vector<std::uint8_t> values_;
};

/// f(V) = sum of all values.
inline long weight(const Assignment& a) {
  return std::accumulate(a.values().begin(), a.values().end(), 0L);
}

/// One "index value" line per vertex, ascending, no trailing newline.
inline std::string emit_assignment(const Assignment& a) {
  std::ostringstream out;
  for (Vertex v = 0; v < a.size(); ++v) out << (v ? "\n" : "") << v << ' ' << a[v];
  return out.str();
}

/// Parses the assignment format. Indices must run 0,1,2,... in order.
inline Assignment parse_assignment(std::string_view text, Parameter kind) {
  detail::LineReader reader(text);
  std::string_view line;
  std::vector<std::size_t> tokens;
  std::vector<std::uint8_t> values;
  while (reader.next(line)) {
    const auto at = reader.line_number();
    if (!detail::parse_unsigned_tokens(line, tokens) || tokens.size() != 2)
      throw ParseError(at, "malformed assignment, expected \"index value\"");
    if (tokens[0] != values.size())
      throw ParseError(at, "expected index " + std::to_string(values.size()) + ", found " +
                               std::to_string(tokens[0]));
    if (tokens[1] > static_cast<std::size_t>(max_value(kind)))
      throw ParseError(at, "value " + std::to_string(tokens[1]) + " not allowed for " +
                               std::string(to_string(kind)));
    values.push_back(static_cast<std::uint8_t>(tokens[1]));
  }
  if (values.empty()) throw ParseError(reader.line_number() + 1, "assignment lists no vertices");
  return {kind, std::move(values)};
}

}  // namespace sierdom
