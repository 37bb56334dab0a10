#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sierdom/assignment.hpp"
#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/solver.hpp"
#include "sierdom/verify.hpp"

namespace sierdom {

struct BruteForceOptions {
  /// Largest order accepted for the 4^n double Roman sweep.
  std::size_t max_order_dr = 13;
  /// Largest order accepted for 3^n sweeps.
  std::size_t max_order_r = 16;
};

namespace detail {

// Enumerates every labeling over `alphabet`, skipping only prefixes whose
// partial weight already reaches the best complete labeling, and keeps the
// lightest one the definitional verifier accepts.
class Enumerator {
 public:
  Enumerator(const Graph& g, Parameter p, std::span<const std::uint8_t> alphabet)
      : g_(g), p_(p), alphabet_(alphabet.begin(), alphabet.end()), values_(g.order(), 0) {}

  void run(Vertex v = 0, long partial = 0) {
    ++nodes_;
    if (found_ && partial >= best_) return;
    if (v == g_.order()) {
      Assignment a(p_, values_);
      if (verify(g_, a, p_)) {
        best_ = partial;
        best_values_ = values_;
        found_ = true;
      }
      return;
    }
    for (auto x : alphabet_) {
      values_[v] = x;
      run(v + 1, partial + x);
    }
    values_[v] = 0;
  }

  bool found() const { return found_; }
  long best() const { return best_; }
  const std::vector<std::uint8_t>& best_values() const { return best_values_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const Graph& g_;
  Parameter p_;
  std::vector<std::uint8_t> alphabet_;
  std::vector<std::uint8_t> values_;
  std::vector<std::uint8_t> best_values_;
  long best_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exhaustive minimum over a caller-chosen value alphabet. Used both as the
/// test oracle and to compare restricted alphabets against the full one.
inline SolveResult brute_force(const Graph& g, Parameter p, std::span<const std::uint8_t> alphabet,
                               const BruteForceOptions& options = {}) {
  const auto cap = p == Parameter::gamma_dr ? options.max_order_dr : options.max_order_r;
  if (g.order() > cap)
    throw LimitError("brute force refuses n=" + std::to_string(g.order()) + " above cap " + std::to_string(cap));
  for (auto x : alphabet)
    if (x > max_value(p)) throw KindError("alphabet value " + std::to_string(x) + " not allowed");

  const auto start = std::chrono::steady_clock::now();
  detail::Enumerator search(g, p, alphabet);
  search.run();
  if (!search.found()) throw PreconditionError("no valid labeling over the given alphabet");
  Assignment witness(p, search.best_values());
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {p, search.best(), std::move(witness), true, {search.nodes(), elapsed}};
}

/// Exhaustive minimum over the full alphabet ({0,1,2,3} or {0,1,2}).
inline SolveResult brute_force(const Graph& g, Parameter p, const BruteForceOptions& options = {}) {
  static constexpr std::uint8_t full_dr[] = {0, 1, 2, 3};
  static constexpr std::uint8_t full_r[] = {0, 1, 2};
  if (p == Parameter::gamma_dr) return brute_force(g, p, full_dr, options);
  return brute_force(g, p, full_r, options);
}

}  // namespace sierdom
