#pragma once

#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"

namespace sierdom {

/// Checked n^k. Throws LimitError on overflow of std::size_t.
inline std::size_t checked_pow(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::size_t>::max() / base)
      throw LimitError(std::to_string(base) + "^" + std::to_string(exponent) + " overflows");
    result *= base;
  }
  return result;
}

/// A word w1...wt over the alphabet {0..alphabet-1}; the label of a vertex of S(G,t).
struct Word {
  std::vector<std::size_t> letters;
  std::size_t alphabet = 0;

  std::size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Big-endian mixed radix: index = sum_i letters[i] * alphabet^(t-1-i).
inline std::size_t word_to_index(const Word& w) {
  std::size_t index = 0;
  for (auto letter : w.letters) {
    if (letter >= w.alphabet)
      throw RangeError("letter " + std::to_string(letter) + " outside alphabet of size " +
                       std::to_string(w.alphabet));
    index = index * w.alphabet + letter;
  }
  return index;
}

inline Word index_to_word(std::size_t index, std::size_t alphabet, std::size_t length) {
  if (alphabet == 0) throw RangeError("empty alphabet");
  if (index >= checked_pow(alphabet, length))
    throw RangeError("index " + std::to_string(index) + " outside [0," + std::to_string(alphabet) + "^" +
                     std::to_string(length) + ")");
  Word w{std::vector<std::size_t>(length), alphabet};
  for (std::size_t i = length; i-- > 0;) {
    w.letters[i] = index % alphabet;
    index /= alphabet;
  }
  return w;
}

/// Dot-separated letters, e.g. "2.0.1". The empty word renders as "".
inline std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) out << (i ? "." : "") << w.letters[i];
  return out.str();
}

struct SierpinskiOptions {
  /// Refuse to build graphs with more than this many vertices.
  std::size_t max_vertices = 1'000'000;
};

/// S(base, t) with vertices indexed by the canonical word index.
struct SierpinskiGraph {
  Graph base;
  std::size_t depth;
  Graph graph;
  std::vector<Vertex> extremes;

  std::size_t alphabet() const noexcept { return base.order(); }
  Word word(Vertex v) const { return index_to_word(v, alphabet(), depth); }
};

namespace detail {

/// Index of the word x^k (k copies of letter x) over an alphabet of size n.
inline std::size_t repeated_letter_index(std::size_t x, std::size_t n, std::size_t k) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < k; ++i) index = index * n + x;
  return index;
}

}  // namespace detail

/**
 * Generalized Sierpinski graph S(base, t).
 *
 * For every base edge {x,y}, every level r in 1..t and every prefix w of
 * length t-r, joins w x y^(r-1) with w y x^(r-1). Nothing else is an edge.
 */
inline SierpinskiGraph sierpinski(const Graph& base, std::size_t t, SierpinskiOptions options = {}) {
  const std::size_t n = base.order();
  if (n < 2) throw OrderError("base graph must have order n >= 2");
  if (t < 1) throw DepthError("depth t must be >= 1");
  std::size_t vertices = 0;
  try {
    vertices = checked_pow(n, t);
  } catch (const LimitError&) {
    throw LimitError("S(G," + std::to_string(t) + ") with n=" + std::to_string(n) +
                     " exceeds the vertex limit " + std::to_string(options.max_vertices));
  }
  if (vertices > options.max_vertices)
    throw LimitError("S(G," + std::to_string(t) + ") would have " + std::to_string(vertices) +
                     " vertices, limit is " + std::to_string(options.max_vertices));

  std::vector<Edge> edges;
  edges.reserve(base.size() * ((vertices - 1) / (n - 1)));
  std::size_t level_weight = 1;  // n^(r-1)
  for (std::size_t r = 1; r <= t; ++r) {
    const std::size_t block = level_weight * n;  // n^r
    const std::size_t prefixes = vertices / block;
    for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
      const std::size_t offset = prefix * block;
      for (auto [x, y] : base.edges()) {
        auto u = offset + x * level_weight + detail::repeated_letter_index(y, n, r - 1);
        auto v = offset + y * level_weight + detail::repeated_letter_index(x, n, r - 1);
        edges.emplace_back(u, v);
      }
    }
    level_weight = block;
  }

  std::vector<Vertex> extremes(n);
  for (std::size_t x = 0; x < n; ++x) extremes[x] = detail::repeated_letter_index(x, n, t);
  return {base, t, Graph(vertices, std::move(edges)), std::move(extremes)};
}

/// Extreme vertices xx...x, listed by letter x.
inline const std::vector<Vertex>& extreme_vertices(const SierpinskiGraph& s) { return s.extremes; }

/// The vertices {w.j : j in V(base)} for a prefix w of length t-1. The map
/// j -> w.j embeds the base graph with fixed indices.
inline VertexSet copy_partition(const SierpinskiGraph& s, const Word& prefix) {
  if (prefix.length() + 1 != s.depth)
    throw RangeError("copy prefix must have length t-1 = " + std::to_string(s.depth - 1));
  if (prefix.alphabet != s.alphabet()) throw RangeError("copy prefix uses a different alphabet");
  const auto first = word_to_index(prefix) * s.alphabet();
  std::vector<Vertex> members(s.alphabet());
  for (std::size_t j = 0; j < s.alphabet(); ++j) members[j] = first + j;
  return VertexSet(std::move(members));
}

}  // namespace sierdom
