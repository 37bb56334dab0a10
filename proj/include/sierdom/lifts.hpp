#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sierdom/assignment.hpp"
#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/sierpinski.hpp"
#include "sierdom/verify.hpp"

namespace sierdom {

/// Stages of the lift from a labeling of G to a labeling of S(G,t).
enum class LiftStage { g, g1, g2 };

inline std::string_view to_string(LiftStage s) {
  switch (s) {
    case LiftStage::g: return "g";
    case LiftStage::g1: return "g1";
    case LiftStage::g2: return "g2";
  }
  return "?";
}

struct LiftSetSizes {
  std::size_t v3 = 0;                 // |V3| of the base labeling
  std::size_t d3 = 0;                 // |D3|
  std::size_t s3_prime = 0;           // |S3'| = n^(t-2) |V3|
  std::size_t s3_double_prime = 0;    // |S3''| = n^(t-2) |D3|
};

struct LiftResult {
  LiftStage stage;
  Assignment assignment;
  long predicted_weight;
  LiftSetSizes sets;
};

/// D3: vertices labelled 3 that have a neighbor labelled 3.
inline VertexSet d3_set(const Graph& g, const Assignment& f) {
  detail::check_shape(g, f);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 3) continue;
    for (auto w : g.neighbors(v))
      if (f[w] == 3) {
        members.push_back(v);
        break;
      }
  }
  return VertexSet(std::move(members));
}

namespace detail {

inline void check_lift_input(const Graph& base, std::size_t t, const Assignment& f) {
  if (t < 2) throw DepthError("lifts need t >= 2 (S(G,1) is G itself)");
  if (base.order() < 2) throw OrderError("base graph must have order n >= 2");
  if (f.kind() != Parameter::gamma_dr) throw PreconditionError("lift input must be a double Roman labeling");
  check_shape(base, f);
  if (!f.part(1).empty()) throw PreconditionError("lift input must not use the value 1");
  if (auto verdict = is_drdf(base, f); !verdict)
    throw PreconditionError("lift input is not a double Roman dominating function (vertex " +
                            std::to_string(*verdict.violator) + " fails condition " +
                            std::string(to_string(verdict.condition)) + ")");
}

}  // namespace detail

/**
 * Lifts a V1-free double Roman dominating function f of `base` to S(base,t).
 *
 *  - g:  every copy w.x takes f(x).
 *  - g1: as g, but the vertices w.u.u with f(u)=3 (the set S3') drop to 2.
 *  - g2: as g1, but the vertices w.v.v with v in D3 (the set S3'') drop to 0.
 *
 * Every stage is again a double Roman dominating function of S(base,t).
 */
inline LiftResult lift(const Graph& base, std::size_t t, const Assignment& f, LiftStage stage) {
  detail::check_lift_input(base, t, f);
  const std::size_t n = base.order();
  const std::size_t vertices = checked_pow(n, t);
  const std::size_t blocks = vertices / (n * n);  // n^(t-2)

  std::vector<std::uint8_t> values(vertices);
  for (std::size_t i = 0; i < vertices; ++i) values[i] = static_cast<std::uint8_t>(f[i % n]);

  const VertexSet v3 = f.part(3);
  const VertexSet d3 = d3_set(base, f);
  if (stage != LiftStage::g)
    for (std::size_t block = 0; block < blocks; ++block)
      for (auto u : v3) values[block * n * n + u * n + u] = 2;
  if (stage == LiftStage::g2)
    for (std::size_t block = 0; block < blocks; ++block)
      for (auto v : d3) values[block * n * n + v * n + v] = 0;

  const long w = weight(f);
  const auto nl = static_cast<long>(n);
  const auto bl = static_cast<long>(blocks);
  const auto v3l = static_cast<long>(v3.size());
  const auto d3l = static_cast<long>(d3.size());
  long predicted = 0;
  switch (stage) {
    case LiftStage::g: predicted = bl * nl * w; break;
    case LiftStage::g1: predicted = bl * (nl * w - v3l); break;
    case LiftStage::g2: predicted = bl * (nl * w - v3l - 2 * d3l); break;
  }
  return {stage,
          Assignment(Parameter::gamma_dr, std::move(values)),
          predicted,
          {v3.size(), d3.size(), blocks * v3.size(), blocks * d3.size()}};
}

inline LiftResult lift_step1(const Graph& base, std::size_t t, const Assignment& f) {
  return lift(base, t, f, LiftStage::g);
}
inline LiftResult lift_step2(const Graph& base, std::size_t t, const Assignment& f) {
  return lift(base, t, f, LiftStage::g1);
}
inline LiftResult lift_step3(const Graph& base, std::size_t t, const Assignment& f) {
  return lift(base, t, f, LiftStage::g2);
}

}  // namespace sierdom
