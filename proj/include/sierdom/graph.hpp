#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sierdom/error.hpp"

namespace sierdom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Immutable once built. Edges are stored normalized (u < v) and sorted;
 * neighbor lists are sorted ascending.
 */
class Graph {
 public:
  /// Validates the edge list: endpoints in range, no loops, no duplicates.
  /// Edge order and orientation are irrelevant.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    if (n == 0) throw OrderError("graph must have at least one vertex");
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has endpoint outside [0," + std::to_string(n) + ")");
      if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw Error("duplicate edge {" + std::to_string(dup->first) + "," +
                  std::to_string(dup->second) + "}");
    edges_ = std::move(edges);
    adjacency_.resize(n);
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& row = adjacency_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  std::span<const Vertex> members() const noexcept { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

inline void check_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.order())
    throw RangeError("vertex " + std::to_string(s.members().back()) + " is not in the graph");
}

// Families.

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw OrderError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw OrderError("cycle needs n >= 3");
  auto edges = std::vector<Edge>{};
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

/// Star K_{1,n-1} centered at vertex 0.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, std::move(edges));
}

/// Erdos-Renyi G(n,p) drawn from a caller-owned engine.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  if (p < 0.0 || p > 1.0) throw RangeError("edge probability must lie in [0,1]");
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Subgraph induced by `u`, relabelled 0..|u|-1 in ascending order of the
/// original indices. `index_map[i]` is the original index of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> index_map;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& u) {
  if (u.empty()) throw PreconditionError("induced subgraph needs a non-empty vertex set");
  check_members(g, u);
  std::vector<Vertex> map(u.begin(), u.end());
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (!u.contains(a) || !u.contains(b)) continue;
    auto ia = static_cast<Vertex>(std::lower_bound(map.begin(), map.end(), a) - map.begin());
    auto ib = static_cast<Vertex>(std::lower_bound(map.begin(), map.end(), b) - map.begin());
    edges.emplace_back(ia, ib);
  }
  return {Graph(map.size(), std::move(edges)), std::move(map)};
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (auto v : s)
    for (auto w : g.neighbors(v))
      if (w > v && s.contains(w)) return false;
  return true;
}

}  // namespace sierdom
