#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sierdom/assignment.hpp"
#include "sierdom/error.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/independence.hpp"
#include "sierdom/lifts.hpp"
#include "sierdom/sierpinski.hpp"
#include "sierdom/solver.hpp"

namespace sierdom {

/// Non-negative fraction kept in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t numerator, std::uint64_t denominator) : num(numerator), den(denominator) {
    if (den == 0) throw RangeError("zero denominator");
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
  }

  std::uint64_t floor() const noexcept { return num / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
  /// this >= k, compared exactly.
  bool at_least(std::uint64_t k) const noexcept { return num >= k * den; }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

namespace detail {

inline void check_bound_input(const Graph& base, std::size_t t) {
  if (t < 2) throw DepthError("bounds need t >= 2 (S(G,1) is G itself)");
  if (base.order() < 2) throw OrderError("base graph must have order n >= 2");
}

}  // namespace detail

/// n^(t-2) * alpha(G) * gamma_dR(G), a lower bound on gamma_dR(S(G,t)).
inline long lower_bound_dr(const Graph& base, std::size_t t) {
  detail::check_bound_input(base, t);
  const auto blocks = static_cast<long>(checked_pow(base.order(), t - 2));
  return blocks * static_cast<long>(independence_number(base).alpha) * exact_gamma_dr(base).weight;
}

/// n^(t-2) * alpha(G) * gamma_R(G), a lower bound on gamma_R(S(G,t)).
inline long lower_bound_r(const Graph& base, std::size_t t) {
  detail::check_bound_input(base, t);
  const auto blocks = static_cast<long>(checked_pow(base.order(), t - 2));
  return blocks * static_cast<long>(independence_number(base).alpha) * exact_gamma_r(base).weight;
}

/// n^(t-2) * (n * w(f) - |V3| - |D3|) for a minimum-weight, V1-free DRDF f.
inline long upper_bound_dr_theorem(const Graph& base, std::size_t t, const Assignment& f) {
  detail::check_bound_input(base, t);
  detail::check_lift_input(base, t, f);
  const long optimum = exact_gamma_dr(base).weight;
  if (weight(f) != optimum)
    throw PreconditionError("labeling has weight " + std::to_string(weight(f)) +
                            " but gamma_dR of the base is " + std::to_string(optimum));
  const auto n = static_cast<long>(base.order());
  const auto blocks = static_cast<long>(checked_pow(base.order(), t - 2));
  return blocks * (n * weight(f) - static_cast<long>(f.part(3).size()) - static_cast<long>(d3_set(base, f).size()));
}

/// Known upper bound on gamma_R(S(K_n,t)):
/// (2n^t + n - 1)/(n + 1) for even t, 2(n^t + 1)/(n + 1) for odd t.
inline Rational ram_upper_bound_r(std::size_t n, std::size_t t) {
  if (n < 2) throw OrderError("need n >= 2");
  if (t < 1) throw DepthError("need t >= 1");
  const std::uint64_t power = checked_pow(n, t);
  if (t % 2 == 0) return {2 * power + n - 1, n + 1};
  return {2 * (power + 1), n + 1};
}

struct Check {
  std::string name;
  bool passed;
};

struct BoundsReport {
  long lower = 0;
  long w_g = 0;
  long w_g1 = 0;
  long w_g2 = 0;
  long upper_theorem = 0;
  /// Set only when the exact solve finished within budget.
  std::optional<long> exact;
  std::size_t v3 = 0;
  std::size_t d3 = 0;
  Assignment base_function{Parameter::gamma_dr, {}};
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

struct SandwichOptions {
  /// Solve gamma_dR(S(G,t)) exactly; otherwise only bounds and lifts are reported.
  bool solve_exact = true;
  SolverOptions solver;
};

/**
 * Lower bound, the three lifts of one optimal base function, the stated upper
 * bound and (optionally) the exact value, with every inequality between them
 * recorded as a check.
 */
inline BoundsReport sandwich_report(const Graph& base, std::size_t t, const SandwichOptions& options = {}) {
  detail::check_bound_input(base, t);
  BoundsReport report;
  auto base_solution = exact_gamma_dr(base);
  report.base_function = base_solution.witness;
  const auto& f = report.base_function;
  report.lower = static_cast<long>(checked_pow(base.order(), t - 2)) *
                 static_cast<long>(independence_number(base).alpha) * base_solution.weight;
  report.upper_theorem = upper_bound_dr_theorem(base, t, f);

  const auto s = sierpinski(base, t);
  auto record_lift = [&](LiftStage stage, long& out) {
    auto lifted = lift(base, t, f, stage);
    out = weight(lifted.assignment);
    report.v3 = lifted.sets.v3;
    report.d3 = lifted.sets.d3;
    const std::string tag(to_string(stage));
    report.checks.push_back({"lift_" + tag + "_valid", static_cast<bool>(is_drdf(s.graph, lifted.assignment))});
    report.checks.push_back({"lift_" + tag + "_weight", out == lifted.predicted_weight});
  };
  record_lift(LiftStage::g, report.w_g);
  record_lift(LiftStage::g1, report.w_g1);
  record_lift(LiftStage::g2, report.w_g2);

  report.checks.push_back({"w_g2<=w_g1", report.w_g2 <= report.w_g1});
  report.checks.push_back({"w_g1<=w_g", report.w_g1 <= report.w_g});
  report.checks.push_back({"w_g2<=upper_theorem", report.w_g2 <= report.upper_theorem});
  report.checks.push_back({"lower<=w_g2", report.lower <= report.w_g2});

  if (options.solve_exact) {
    auto solved = exact_gamma_dr(s.graph, options.solver);
    if (solved.optimal) {
      report.exact = solved.weight;
      report.checks.push_back({"lower<=exact", report.lower <= solved.weight});
      report.checks.push_back({"exact<=w_g2", solved.weight <= report.w_g2});
      report.checks.push_back({"exact<=upper_theorem", solved.weight <= report.upper_theorem});
    }
  }
  return report;
}

/// key=value lines with stable keys; "exact=unknown" when not solved.
inline std::string format_report(const BoundsReport& r) {
  std::ostringstream out;
  out << "lower=" << r.lower << '\n'
      << "w_g=" << r.w_g << '\n'
      << "w_g1=" << r.w_g1 << '\n'
      << "w_g2=" << r.w_g2 << '\n'
      << "upper_theorem=" << r.upper_theorem << '\n'
      << "exact=" << (r.exact ? std::to_string(*r.exact) : std::string("unknown")) << '\n'
      << "v3=" << r.v3 << '\n'
      << "d3=" << r.d3 << '\n';
  for (const auto& c : r.checks) out << "check." << c.name << '=' << (c.passed ? "pass" : "fail") << '\n';
  out << "verdict=" << (r.passed() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace sierdom
