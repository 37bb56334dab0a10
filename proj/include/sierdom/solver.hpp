#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "sierdom/assignment.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/verify.hpp"

namespace sierdom {

struct SolverOptions {
  /// Stop after this many search nodes; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// Wall-clock budget in seconds; 0 means unlimited.
  double max_seconds = 0.0;
  /// Worker threads for the search tree; 1 runs everything inline.
  unsigned threads = 1;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
};

struct SolveResult {
  Parameter parameter;
  long weight;
  Assignment witness;
  /// False when a budget ran out; `witness` is then the best labeling found.
  bool optimal;
  SolveStats stats;
};

namespace detail {

/**
 * Labeling rules shared by both parameters, phrased as a covering problem:
 * a vertex labelled x contributes supply[x] to each neighbor, and a vertex
 * labelled x is satisfied once its neighbors supply at least required[x].
 */
struct CoverRules {
  Parameter parameter;
  std::array<int, 4> supply;
  std::array<int, 4> required;
  /// Values the search may assign, in branching order.
  std::vector<std::uint8_t> branch_values;

  int max_supply() const { return *std::max_element(supply.begin(), supply.end()); }
};

// Values 1 are never needed for the double Roman optimum, so that search only
// ranges over {3,2,0}.
inline CoverRules double_roman_rules() { return {Parameter::gamma_dr, {0, 0, 1, 2}, {2, 1, 0, 0}, {3, 2, 0}}; }
inline CoverRules roman_rules() { return {Parameter::gamma_r, {0, 0, 1, 0}, {1, 0, 0, 0}, {2, 0, 1}}; }

inline constexpr std::uint8_t kUnassigned = 0xff;

struct Decision {
  Vertex vertex;
  std::uint8_t value;
};

/// Incumbent shared by all workers.
class Incumbent {
 public:
  Incumbent(long weight, std::vector<std::uint8_t> values) : weight_(weight), values_(std::move(values)) {}

  long weight() const noexcept { return weight_.load(std::memory_order_relaxed); }

  void offer(long weight, const std::vector<std::uint8_t>& values) {
    std::lock_guard lock(mutex_);
    if (weight >= weight_.load(std::memory_order_relaxed)) return;
    values_ = values;
    weight_.store(weight, std::memory_order_relaxed);
  }

  std::vector<std::uint8_t> values() const {
    std::lock_guard lock(mutex_);
    return values_;
  }

 private:
  std::atomic<long> weight_;
  mutable std::mutex mutex_;
  std::vector<std::uint8_t> values_;
};

struct SearchControl {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stopped{false};

  /// Counts one node; returns false once a budget is exhausted.
  bool tick() {
    if (stopped.load(std::memory_order_relaxed)) return false;
    auto count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes != 0 && count > max_nodes) {
      stopped = true;
      return false;
    }
    if (max_seconds > 0.0 && (count & 0xff) == 0 && elapsed() > max_seconds) {
      stopped = true;
      return false;
    }
    return true;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

/**
 * Depth-first branch and bound over vertex labels.
 *
 * A vertex is pending while it is not yet satisfied: unassigned vertices
 * whose neighbors supply less than required[0], or assigned vertices below
 * their own requirement. Unassigned vertices that are not pending are
 * labelled 0 at the leaf. Each node picks the pending vertex with the fewest
 * free vertices in its closed neighborhood and branches on the free member
 * of that neighborhood touching the most pending vertices.
 */
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const CoverRules& rules, Incumbent& incumbent, SearchControl& control)
      : g_(g),
        rules_(rules),
        incumbent_(incumbent),
        control_(control),
        value_(g.order(), kUnassigned),
        supply_in_(g.order(), 0),
        free_neighbors_(g.order(), 0),
        pending_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) free_neighbors_[v] = static_cast<int>(g.degree(v));
    max_supply_ = rules_.max_supply();
  }

  void assign(Vertex u, std::uint8_t x) {
    value_[u] = x;
    weight_ += x;
    for (auto w : g_.neighbors(u)) {
      supply_in_[w] += rules_.supply[x];
      --free_neighbors_[w];
    }
    decisions_.push_back({u, x});
  }

  void unassign() {
    auto [u, x] = decisions_.back();
    decisions_.pop_back();
    for (auto w : g_.neighbors(u)) {
      supply_in_[w] -= rules_.supply[x];
      ++free_neighbors_[w];
    }
    weight_ -= x;
    value_[u] = kUnassigned;
  }

  /// Explores the subtree below the current decisions. With `split_depth`
  /// set, stops at that many decisions and records the prefix instead.
  void search(std::size_t split_depth = 0, std::vector<std::vector<Decision>>* frontier = nullptr) {
    if (!control_.tick()) return;
    const long best = incumbent_.weight();
    if (weight_ >= best) return;

    // Scan: classify pending vertices, detect dead ends, pick the branching target.
    const std::size_t n = g_.order();
    Vertex target = n;
    int target_options = std::numeric_limits<int>::max();
    int target_deficit = 0;
    bool any_pending = false;
    for (Vertex v = 0; v < n; ++v) {
      const bool free = value_[v] == kUnassigned;
      const int need = rules_.required[free ? 0 : value_[v]] - supply_in_[v];
      pending_[v] = need > 0;
      if (need <= 0) continue;
      any_pending = true;
      if (!free && supply_in_[v] + max_supply_ * free_neighbors_[v] < rules_.required[value_[v]]) return;
      const int options = free_neighbors_[v] + (free ? 1 : 0);
      if (options < target_options || (options == target_options && need > target_deficit)) {
        target = v;
        target_options = options;
        target_deficit = need;
      }
    }

    if (!any_pending) {
      record_leaf();
      return;
    }
    if (weight_ + lower_bound() >= best) return;

    if (frontier != nullptr && decisions_.size() >= split_depth) {
      frontier->push_back(decisions_);
      return;
    }

    const Vertex u = branch_vertex(target);
    for (auto x : rules_.branch_values) {
      assign(u, x);
      search(split_depth, frontier);
      unassign();
      if (control_.stopped.load(std::memory_order_relaxed)) return;
    }
  }

 private:
  std::size_t pending_neighbors(Vertex u) const {
    std::size_t count = 0;
    for (auto w : g_.neighbors(u)) count += pending_[w];
    return count;
  }

  Vertex branch_vertex(Vertex target) const {
    Vertex chosen = g_.order();
    std::size_t chosen_score = 0;
    auto consider = [&](Vertex u) {
      if (value_[u] != kUnassigned) return;
      auto score = pending_neighbors(u) + pending_[u];
      if (chosen == g_.order() || score > chosen_score ||
          (score == chosen_score && g_.degree(u) > g_.degree(chosen))) {
        chosen = u;
        chosen_score = score;
      }
    };
    consider(target);
    for (auto w : g_.neighbors(target)) consider(w);
    return chosen;
  }

  // Every unit of unmet requirement must be bought from some free vertex in
  // the closed neighborhood. Labelling a free vertex u with x yields at most
  // supply[x] units per pending neighbor plus its own deficit when x settles
  // u itself, so each unit costs at least min_x x / units(u, x).
  double lower_bound() {
    const std::size_t n = g_.order();
    rate_.assign(n, std::numeric_limits<double>::infinity());
    for (Vertex u = 0; u < n; ++u) {
      if (value_[u] != kUnassigned) continue;
      const auto around = static_cast<double>(pending_neighbors(u));
      const int own = pending_[u] ? rules_.required[0] - supply_in_[u] : 0;
      for (auto x : rules_.branch_values) {
        if (x == 0) continue;
        double units = rules_.supply[x] * around + (rules_.required[x] == 0 ? own : 0);
        if (units > 0) rate_[u] = std::min(rate_[u], x / units);
      }
    }
    double bound = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      if (!pending_[v]) continue;
      const bool free = value_[v] == kUnassigned;
      const int need = rules_.required[free ? 0 : value_[v]] - supply_in_[v];
      double rate = free ? rate_[v] : std::numeric_limits<double>::infinity();
      for (auto w : g_.neighbors(v))
        if (value_[w] == kUnassigned) rate = std::min(rate, rate_[w]);
      bound += need * rate;
    }
    return std::ceil(bound - 1e-9);
  }

  void record_leaf() {
    if (weight_ >= incumbent_.weight()) return;
    std::vector<std::uint8_t> values(value_);
    for (auto& x : values)
      if (x == kUnassigned) x = 0;
    incumbent_.offer(weight_, values);
  }

  const Graph& g_;
  const CoverRules& rules_;
  Incumbent& incumbent_;
  SearchControl& control_;
  std::vector<std::uint8_t> value_;
  std::vector<int> supply_in_;
  std::vector<int> free_neighbors_;
  std::vector<char> pending_;
  std::vector<double> rate_;
  std::vector<Decision> decisions_;
  long weight_ = 0;
  int max_supply_ = 0;
};

/// Greedy dominating set (largest uncovered closed neighborhood first).
inline std::vector<Vertex> greedy_dominating_set(const Graph& g) {
  std::vector<char> covered(g.order(), 0);
  std::size_t remaining = g.order();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::size_t gain = !covered[v];
      for (auto w : g.neighbors(v)) gain += !covered[w];
      if (gain > best_gain) best = v, best_gain = gain;
    }
    chosen.push_back(best);
    auto cover = [&](Vertex x) {
      if (!covered[x]) covered[x] = 1, --remaining;
    };
    cover(best);
    for (auto w : g.neighbors(best)) cover(w);
  }
  return chosen;
}

/// Starting incumbent: the cheaper of "2 everywhere" and a greedy dominating
/// set labelled with the top value.
inline Incumbent initial_incumbent(const Graph& g, const CoverRules& rules) {
  const std::uint8_t top = static_cast<std::uint8_t>(max_value(rules.parameter));
  auto dominators = greedy_dominating_set(g);
  if (top * dominators.size() < 2 * g.order()) {
    std::vector<std::uint8_t> values(g.order(), 0);
    for (auto v : dominators) values[v] = top;
    return {static_cast<long>(top * dominators.size()), std::move(values)};
  }
  return {static_cast<long>(2 * g.order()), std::vector<std::uint8_t>(g.order(), 2)};
}

inline SolveResult solve_cover(const Graph& g, const CoverRules& rules, const SolverOptions& options) {
  SearchControl control;
  control.max_nodes = options.max_nodes;
  control.max_seconds = options.max_seconds;
  Incumbent incumbent = initial_incumbent(g, rules);

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    CoverSearch(g, rules, incumbent, control).search();
  } else {
    // Split the tree near the root, then let workers drain the subtrees.
    std::size_t depth = 1;
    for (std::size_t leaves = rules.branch_values.size(); leaves < 8 * threads; leaves *= rules.branch_values.size())
      ++depth;
    std::vector<std::vector<Decision>> frontier;
    CoverSearch(g, rules, incumbent, control).search(depth, &frontier);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      CoverSearch local(g, rules, incumbent, control);
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        for (auto [v, x] : frontier[i]) local.assign(v, x);
        local.search();
        for (std::size_t k = 0; k < frontier[i].size(); ++k) local.unassign();
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  Assignment witness(rules.parameter, incumbent.values());
  const bool optimal = !control.stopped.load();
  return {rules.parameter, weight(witness), std::move(witness), optimal, {control.nodes.load(), control.elapsed()}};
}

}  // namespace detail

/// Exact double Roman domination number. The witness never uses the value 1.
inline SolveResult exact_gamma_dr(const Graph& g, const SolverOptions& options = {}) {
  return detail::solve_cover(g, detail::double_roman_rules(), options);
}

/// Exact Roman domination number over the full alphabet {0,1,2}.
inline SolveResult exact_gamma_r(const Graph& g, const SolverOptions& options = {}) {
  return detail::solve_cover(g, detail::roman_rules(), options);
}

inline SolveResult solve(const Graph& g, Parameter p, const SolverOptions& options = {}) {
  return p == Parameter::gamma_dr ? exact_gamma_dr(g, options) : exact_gamma_r(g, options);
}

}  // namespace sierdom
