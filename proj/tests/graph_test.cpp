#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "sierdom/graph.hpp"
#include "sierdom/graph_io.hpp"
#include "sierdom/independence.hpp"

using namespace sierdom;

namespace {

Graph p3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST(ParseGraph, Triangle) {
  EXPECT_EQ(parse_graph("3 3\n0 1\n1 2\n0 2"), complete_graph(3));
}

TEST(ParseGraph, SingleEdge) {
  auto g = parse_graph("2 1\n0 1");
  EXPECT_EQ(g, complete_graph(2));
  EXPECT_TRUE(g.adjacent(1, 0));
}

TEST(ParseGraph, CommentsBlankLinesAndReversedEndpoints) {
  auto g = parse_graph("# triangle\n\n3 3\n# edges\n1 0\n2 1\n  2 0  \n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(ParseGraph, SelfLoopNamesLine) {
  try {
    parse_graph("3 3\n0 1\n1 2\n1 1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(ParseGraph, Errors) {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of(""), 1u);                      // missing header
  EXPECT_EQ(line_of("3\n0 1"), 1u);                // malformed header
  EXPECT_EQ(line_of("x 1\n0 1"), 1u);
  EXPECT_EQ(line_of("0 0"), 1u);                   // no vertices
  EXPECT_EQ(line_of("3 1\n0 3"), 2u);              // out of range
  EXPECT_EQ(line_of("3 2\n0 1\n1 0"), 3u);         // duplicate
  EXPECT_EQ(line_of("3 2\n0 1"), 3u);              // too few edges
  EXPECT_EQ(line_of("3 1\n0 1\n1 2"), 3u);         // too many edges
  EXPECT_EQ(line_of("3 1\n0 1 2"), 2u);            // extra token
  EXPECT_EQ(line_of("3 1\n0 -1"), 2u);
}

TEST(EmitGraph, CanonicalText) {
  EXPECT_EQ(emit_graph(complete_graph(2)), "2 1\n0 1");
  EXPECT_EQ(emit_graph(Graph(3, {{2, 1}, {0, 2}, {1, 0}})), "3 3\n0 1\n0 2\n1 2");
  EXPECT_EQ(emit_graph(empty_graph(2)), "2 0");
}

TEST(EmitGraph, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const double p = static_cast<double>(rng() % 101) / 100.0;
    auto g = random_gnp(n, p, rng);
    EXPECT_EQ(parse_graph(emit_graph(g)), g);
  }
}

TEST(GraphInvariants, SymmetricAdjacencyAndDegrees) {
  for (const auto& [name, g] : test_support::corpus()) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      for (auto w : g.neighbors(v)) {
        EXPECT_NE(v, w) << name;
        EXPECT_TRUE(g.adjacent(w, v)) << name;
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.size()) << name;
  }
}

TEST(GraphConstruction, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(0, {}), OrderError);
  EXPECT_THROW(Graph(2, {{0, 2}}), RangeError);
  EXPECT_THROW(Graph(2, {{1, 1}}), Error);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), Error);
}

TEST(CompleteGraph, EdgeCounts) {
  EXPECT_EQ(complete_graph(3).size(), 3u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(complete_graph(1).size(), 0u);
  EXPECT_THROW(complete_graph(0), OrderError);
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete_graph(3), {0, 1}).graph, complete_graph(2));

  auto sub = induced_subgraph(p3(), {0, 2});
  EXPECT_EQ(sub.graph, empty_graph(2));
  EXPECT_EQ(sub.index_map, (std::vector<Vertex>{0, 2}));

  auto g = Graph(5, {{0, 1}, {1, 4}, {2, 3}, {0, 4}});
  auto whole = induced_subgraph(g, {0, 1, 2, 3, 4});
  EXPECT_EQ(whole.graph, g);
}

TEST(InducedSubgraph, RelabelsByOriginalOrder) {
  auto g = Graph(5, {{1, 3}, {3, 4}, {0, 2}});
  auto sub = induced_subgraph(g, {4, 3, 1});
  EXPECT_EQ(sub.index_map, (std::vector<Vertex>{1, 3, 4}));
  EXPECT_EQ(sub.graph, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(InducedSubgraph, RejectsEmptyOrForeignSets) {
  EXPECT_THROW(induced_subgraph(p3(), {}), PreconditionError);
  EXPECT_THROW(induced_subgraph(p3(), {0, 3}), RangeError);
}

TEST(IsIndependent, Examples) {
  EXPECT_FALSE(is_independent(complete_graph(3), {0, 1}));
  EXPECT_TRUE(is_independent(p3(), {0, 2}));
  EXPECT_TRUE(is_independent(p3(), {}));
  EXPECT_TRUE(is_independent(complete_graph(4), {}));
}

TEST(IndependenceNumber, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(independence_number(complete_graph(n)).alpha, 1u);
  EXPECT_EQ(independence_number(p3()).alpha, 2u);
  EXPECT_EQ(independence_number(cycle_graph(5)).alpha, 2u);
  EXPECT_EQ(independence_number(empty_graph(3)).alpha, 3u);
}

TEST(IndependenceNumber, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs;
  for (const auto& [name, g] : test_support::corpus()) graphs.push_back(g);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 15;
    graphs.push_back(random_gnp(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng));
  }
  for (const auto& g : graphs) {
    auto result = independence_number(g);
    EXPECT_EQ(result.alpha, test_support::brute_force_alpha(g)) << emit_graph(g);
    EXPECT_EQ(result.witness.size(), result.alpha);
    EXPECT_TRUE(is_independent(g, result.witness));
  }
}
