// sierdom: generate generalized Sierpinski graphs, solve Roman and double
// Roman domination exactly, lift labelings and check bounds.
//
// Exit codes: 0 ok, 2 usage or input error, 3 budget exhausted, 4 check failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sierdom/sierdom.hpp"

namespace {

using namespace sierdom;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFailed = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content << '\n';
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw Error("bad " + what + " \"" + text + "\"");
  return value;
}

/// Either a named family ("complete:4", "path:5", "cycle:6", "star:4",
/// "empty:3", "gnp:8:0.5") or a path to a graph file.
Graph load_graph(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return parse_graph(read_file(spec));
  const auto family = spec.substr(0, colon);
  auto rest = spec.substr(colon + 1);
  if (family == "gnp") {
    auto second = rest.find(':');
    if (second == std::string::npos) throw Error("gnp needs \"gnp:<n>:<p>\"");
    const auto n = parse_count(rest.substr(0, second), "order");
    const double p = std::stod(rest.substr(second + 1));
    std::mt19937_64 rng(seed);
    return random_gnp(n, p, rng);
  }
  const auto n = parse_count(rest, "order");
  if (family == "complete") return complete_graph(n);
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "star") return star_graph(n);
  if (family == "empty") return empty_graph(n);
  throw Error("unknown graph family \"" + family + "\"");
}

Parameter parse_parameter(const std::string& name) {
  if (name == "roman") return Parameter::gamma_r;
  return Parameter::gamma_dr;
}

LiftStage parse_stage(const std::string& name) {
  if (name == "g1") return LiftStage::g1;
  if (name == "g2") return LiftStage::g2;
  return LiftStage::g;
}

struct Common {
  std::string graph;
  std::size_t t = 2;
  std::string param = "double-roman";
  std::string stage = "g";
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  unsigned threads = 1;
  std::uint64_t seed = 20240101;
  std::string out;
  std::string assignment;
  std::string f;
  std::size_t max_vertices = 1'000'000;
  bool no_exact = false;
  std::string family = "complete";
  std::size_t n_min = 2;
  std::size_t n_max = 4;

  SolverOptions solver() const { return {budget_nodes, budget_seconds, threads}; }
};

int cmd_gen(const Common& c) {
  const auto base = load_graph(c.graph, c.seed);
  const auto s = sierpinski(base, c.t, {c.max_vertices});
  if (c.out.empty()) {
    std::cout << emit_graph(s.graph) << '\n';
    return kExitOk;
  }
  write_file(c.out, emit_graph(s.graph));
  std::ostringstream words;
  words << "# extreme vertices: letter index\n";
  for (std::size_t x = 0; x < s.extremes.size(); ++x) words << "extreme " << x << ' ' << s.extremes[x] << '\n';
  words << "# index word";
  for (Vertex v = 0; v < s.graph.order(); ++v) words << '\n' << v << ' ' << format_word(s.word(v));
  write_file(c.out + ".words", words.str());
  std::cout << "vertices=" << s.graph.order() << " edges=" << s.graph.size() << " out=" << c.out << '\n';
  return kExitOk;
}

int cmd_solve(const Common& c) {
  const auto g = load_graph(c.graph, c.seed);
  const auto p = parse_parameter(c.param);
  const auto result = solve(g, p, c.solver());
  std::cout << "parameter=" << to_string(result.parameter) << " weight=" << result.weight
            << " optimal=" << (result.optimal ? "true" : "false") << '\n'
            << emit_assignment(result.witness) << '\n';
  if (!c.out.empty()) write_file(c.out, emit_assignment(result.witness));
  return result.optimal ? kExitOk : kExitBudget;
}

int cmd_verify(const Common& c) {
  const auto g = load_graph(c.graph, c.seed);
  const auto p = parse_parameter(c.param);
  const auto a = parse_assignment(read_file(c.assignment), p);
  const auto verdict = verify(g, a, p);
  if (verdict) {
    std::cout << "pass weight=" << weight(a) << '\n';
    return kExitOk;
  }
  std::cout << "fail vertex=" << *verdict.violator << " condition=" << to_string(verdict.condition) << '\n';
  return kExitFailed;
}

int cmd_construct(const Common& c) {
  const auto base = load_graph(c.graph, c.seed);
  const auto f = parse_assignment(read_file(c.f), Parameter::gamma_dr);
  const auto stage = parse_stage(c.stage);
  const auto lifted = lift(base, c.t, f, stage);
  const auto s = sierpinski(base, c.t, {c.max_vertices});
  const bool valid = static_cast<bool>(is_drdf(s.graph, lifted.assignment));
  const long actual = weight(lifted.assignment);
  std::cout << "stage=" << to_string(stage) << " predicted=" << lifted.predicted_weight << " actual=" << actual
            << " valid=" << (valid ? "true" : "false") << " v3=" << lifted.sets.v3 << " d3=" << lifted.sets.d3
            << '\n';
  if (!c.out.empty())
    write_file(c.out, emit_assignment(lifted.assignment));
  else
    std::cout << emit_assignment(lifted.assignment) << '\n';
  return valid && actual == lifted.predicted_weight ? kExitOk : kExitFailed;
}

int cmd_bounds(const Common& c) {
  const auto base = load_graph(c.graph, c.seed);
  SandwichOptions options{!c.no_exact, c.solver()};
  const auto report = sandwich_report(base, c.t, options);
  std::cout << format_report(report);
  if (!report.passed()) return kExitFailed;
  return !c.no_exact && !report.exact ? kExitBudget : kExitOk;
}

std::string match_flag(bool optimal, long found, std::optional<long> expected) {
  if (!expected) return "-";
  if (!optimal) return "inconclusive";
  return found == *expected ? "true" : "false";
}

int cmd_table(const Common& c) {
  const bool known = c.family == "complete" && c.t == 2;
  std::cout << "n gamma_r expected_r match_r gamma_dr expected_dr match_dr\n";
  bool all_match = true;
  bool any_inconclusive = false;
  for (std::size_t n = c.n_min; n <= c.n_max; ++n) {
    const auto base = load_graph(c.family + ":" + std::to_string(n), c.seed);
    const auto s = sierpinski(base, c.t, {c.max_vertices});
    const auto r = exact_gamma_r(s.graph, c.solver());
    const auto d = exact_gamma_dr(s.graph, c.solver());
    std::optional<long> expected_r, expected_dr;
    if (known) {
      expected_r = 2 * static_cast<long>(n) - 1;
      expected_dr = 3 * static_cast<long>(n) - 1;
    }
    auto cell = [](bool optimal, long w) { return std::to_string(w) + (optimal ? "" : "+"); };
    auto show = [](std::optional<long> e) { return e ? std::to_string(*e) : std::string("-"); };
    const auto mr = match_flag(r.optimal, r.weight, expected_r);
    const auto md = match_flag(d.optimal, d.weight, expected_dr);
    std::cout << n << ' ' << cell(r.optimal, r.weight) << ' ' << show(expected_r) << ' ' << mr << ' '
              << cell(d.optimal, d.weight) << ' ' << show(expected_dr) << ' ' << md << '\n';
    all_match = all_match && mr != "false" && md != "false";
    any_inconclusive = any_inconclusive || mr == "inconclusive" || md == "inconclusive";
  }
  if (known) std::cout << "all_match=" << (all_match ? "true" : "false") << '\n';
  if (!all_match) return kExitFailed;
  return any_inconclusive ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Sierpinski graphs and (double) Roman domination"};
  app.require_subcommand(1);
  Common c;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", c.budget_nodes, "Search node budget (0 = unlimited)");
    sub->add_option("--budget-seconds", c.budget_seconds, "Wall-clock budget in seconds (0 = unlimited)");
    sub->add_option("--threads", c.threads, "Solver threads")->check(CLI::Range(1u, 256u));
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph, "Graph file or family (complete:<n>, path:<n>, cycle:<n>, star:<n>, gnp:<n>:<p>)")
        ->required();
    sub->add_option("--seed", c.seed, "Seed for random families");
  };
  const auto param_check = CLI::IsMember({"roman", "double-roman"});

  auto* gen = app.add_subcommand("gen", "Write S(G,t) and a sidecar with words and extreme vertices");
  add_graph(gen);
  gen->add_option("--t", c.t, "Depth t >= 1")->required();
  gen->add_option("--out", c.out, "Output graph file (sidecar goes to <out>.words)");
  gen->add_option("--max-vertices", c.max_vertices, "Refuse graphs with more vertices");

  auto* solve_cmd = app.add_subcommand("solve", "Exact gamma_R or gamma_dR");
  add_graph(solve_cmd);
  solve_cmd->add_option("--param", c.param)->check(param_check);
  solve_cmd->add_option("--out", c.out, "Also write the witness to this file");
  add_budget(solve_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a labeling");
  add_graph(verify_cmd);
  verify_cmd->add_option("--assignment", c.assignment, "Assignment file")->required();
  verify_cmd->add_option("--param", c.param)->check(param_check);

  auto* construct = app.add_subcommand("construct", "Lift a base labeling to S(G,t)");
  add_graph(construct);
  construct->add_option("--t", c.t, "Depth t >= 2")->required();
  construct->add_option("--f", c.f, "V1-free double Roman labeling of the base graph")->required();
  construct->add_option("--stage", c.stage)->check(CLI::IsMember({"g", "g1", "g2"}));
  construct->add_option("--out", c.out, "Output assignment file");
  construct->add_option("--max-vertices", c.max_vertices, "Refuse graphs with more vertices");

  auto* bounds = app.add_subcommand("bounds", "Lower bound, lifts, upper bound and exact value");
  add_graph(bounds);
  bounds->add_option("--t", c.t, "Depth t >= 2")->required();
  bounds->add_flag("--no-exact", c.no_exact, "Skip the exact solve of S(G,t)");
  add_budget(bounds);

  auto* table = app.add_subcommand("table", "Exact values of S(family_n, t) over a range of n");
  table->add_option("--family", c.family)->check(CLI::IsMember({"complete", "path", "cycle", "star"}));
  table->add_option("--t", c.t, "Depth t >= 1");
  table->add_option("--n-min", c.n_min);
  table->add_option("--n-max", c.n_max);
  table->add_option("--seed", c.seed);
  table->add_option("--max-vertices", c.max_vertices);
  add_budget(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*solve_cmd) return cmd_solve(c);
    if (*verify_cmd) return cmd_verify(c);
    if (*construct) return cmd_construct(c);
    if (*bounds) return cmd_bounds(c);
    if (*table) return cmd_table(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
