#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sierdom/graph.hpp"

namespace sierdom {

struct IndependenceResult {
  std::size_t alpha = 0;
  VertexSet witness;
};

namespace detail {

// Branching rule: for a vertex v of minimum degree among the candidates,
// every maximum independent set contains v or some neighbor of v. Degree
// <= 1 vertices are taken without branching.
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g), alive_(g.order(), 1) {}

  IndependenceResult run() {
    std::vector<Vertex> candidates(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) candidates[v] = v;
    search(candidates);
    return {best_.size(), VertexSet(best_)};
  }

 private:
  std::size_t live_degree(Vertex v) const {
    std::size_t d = 0;
    for (auto w : g_.neighbors(v)) d += alive_[w];
    return d;
  }

  void search(const std::vector<Vertex>& candidates) {
    if (current_.size() + candidates.size() <= best_.size()) return;
    if (candidates.empty()) {
      best_ = current_;
      return;
    }
    Vertex pivot = candidates.front();
    std::size_t pivot_degree = live_degree(pivot);
    for (auto v : candidates) {
      auto d = live_degree(v);
      if (d < pivot_degree) pivot = v, pivot_degree = d;
    }

    std::vector<Vertex> branch_on{pivot};
    if (pivot_degree > 1)
      for (auto w : g_.neighbors(pivot))
        if (alive_[w]) branch_on.push_back(w);

    for (auto chosen : branch_on) {
      // Take `chosen`, drop its closed neighborhood.
      std::vector<Vertex> removed;
      auto drop = [&](Vertex x) {
        if (alive_[x]) alive_[x] = 0, removed.push_back(x);
      };
      drop(chosen);
      for (auto w : g_.neighbors(chosen)) drop(w);
      std::vector<Vertex> rest;
      for (auto v : candidates)
        if (alive_[v]) rest.push_back(v);
      current_.push_back(chosen);
      search(rest);
      current_.pop_back();
      for (auto x : removed) alive_[x] = 1;
    }
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// Exact independence number with a maximum independent set as witness.
inline IndependenceResult independence_number(const Graph& g) {
  return detail::MaxIndependentSet(g).run();
}

}  // namespace sierdom
