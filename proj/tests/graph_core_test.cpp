#include <gtest/gtest.h>

#include "pairdom/errors.hpp"
#include "pairdom/generators.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/io.hpp"
#include "pairdom/matching.hpp"
#include "test_support.hpp"

namespace pairdom {
namespace {

using testing::cex6_graph;
using testing::complete_graph;
using testing::cycle_graph;
using testing::make_graph;
using testing::path_graph;

TEST(ParseGraph, SmallestInstance) {
  Graph g = parse_graph("2 1\n1 2");
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.adjacent(1, 2));
}

TEST(ParseGraph, PathWithComments) {
  Graph g = parse_graph("# a path\n4 3\n1 2\n# middle\n2 3\n3 4\n");
  EXPECT_EQ(g, path_graph(4));
}

TEST(ParseGraph, SelfLoopNamesLine) {
  try {
    parse_graph("3 2\n1 2\n1 1");
    FAIL() << "self-loop accepted";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(ParseGraph, RejectsBadInput) {
  auto line_of = [](const char *text) {
    try {
      parse_graph(text);
    } catch (const ParseError &e) {
      return static_cast<long>(e.line());
    }
    return -1L;
  };
  EXPECT_EQ(line_of("3 2\n1 2\n2 1\n"), 3);   // duplicate, reversed
  EXPECT_EQ(line_of("3 1\n1 4\n"), 2);        // out of range
  EXPECT_EQ(line_of("3 1\n0 2\n"), 2);
  EXPECT_EQ(line_of("3 1\n1  2\n"), 2);       // double space
  EXPECT_EQ(line_of("3 1\n1 2 3\n"), 2);
  EXPECT_EQ(line_of("3 1\n1 x\n"), 2);
  EXPECT_EQ(line_of("3\n"), 1);
  EXPECT_EQ(line_of("3 1\n1 2\n2 3\n"), 3);   // too many lines
  EXPECT_EQ(line_of("3 2\n1 2\n"), 0);        // too few lines
  EXPECT_EQ(line_of(""), 0);
}

TEST(ParseGraph, SerializeRoundTripOnRandomGraphs) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gen::random_connected_graph(static_cast<int>(rng.uniform(2, 15)), 25, rng);
    const std::string text = serialize_graph(g);
    Graph back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), text);
  }
}

TEST(GraphCore, FromEdgesRejectsInvalid) {
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop), ArgumentError);
  std::vector<Edge> dup{{1, 2}, {2, 1}};
  EXPECT_THROW(Graph::from_edges(2, dup), ArgumentError);
  std::vector<Edge> range{{1, 3}};
  EXPECT_THROW(Graph::from_edges(2, range), ArgumentError);
}

TEST(GraphCore, Connectivity) {
  EXPECT_TRUE(path_graph(5).is_connected());
  EXPECT_FALSE(make_graph(4, {{1, 2}, {3, 4}}).is_connected());
  EXPECT_TRUE(make_graph(3, {{1, 2}}).has_isolated_vertex());
}

TEST(IsDominating, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_TRUE(is_dominating(p4, std::vector<Vertex>{2, 3}));
  EXPECT_FALSE(is_dominating(p4, std::vector<Vertex>{1}));
  EXPECT_TRUE(is_dominating(cex6_graph(), std::vector<Vertex>{3, 5}));
  EXPECT_THROW(is_dominating(p4, std::vector<Vertex>{5}), ArgumentError);
}

TEST(PerfectMatching, Examples) {
  EXPECT_TRUE(has_perfect_matching(complete_graph(2)));
  EXPECT_FALSE(has_perfect_matching(path_graph(3)));
  EXPECT_TRUE(has_perfect_matching(cycle_graph(4)));
  EXPECT_FALSE(has_perfect_matching(testing::star_graph(4, 1)));
}

TEST(PerfectMatching, SizeGuard) {
  EXPECT_THROW(has_perfect_matching(path_graph(26)), CapacityError);
  EXPECT_TRUE(has_perfect_matching(path_graph(26), 30));
  EXPECT_THROW(has_perfect_matching(path_graph(4), 3), CapacityError);
}

TEST(PerfectMatching, AgreesWithEdgeSubsetEnumeration) {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 10));
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (rng.chance(35, 100) && edges.size() < 20) edges.emplace_back(u, v);
    Graph g = make_graph(n, edges);
    EXPECT_EQ(has_perfect_matching(g), testing::perfect_matching_by_edge_subsets(g))
        << serialize_graph(g);
  }
}

TEST(Verify, Examples) {
  const Graph p4 = path_graph(4);
  EXPECT_TRUE(verify_paired_dominating(p4, PairedSolution::from_pairs({{2, 3}})));
  auto bad = verify_paired_dominating(p4, PairedSolution::from_pairs({{1, 4}}));
  EXPECT_FALSE(bad.valid);
  EXPECT_EQ(bad.reason, VerifyReason::non_edge_pair);
  EXPECT_TRUE(verify_paired_dominating(cex6_graph(), PairedSolution::from_pairs({{3, 5}})));
}

TEST(Verify, ReasonCodes) {
  const Graph p4 = path_graph(4);
  auto undominated = verify_paired_dominating(p4, PairedSolution::from_pairs({{1, 2}}));
  EXPECT_EQ(undominated.reason, VerifyReason::not_dominating);

  PairedSolution overlap{{1, 2, 3}, {{1, 2}, {2, 3}}};
  EXPECT_EQ(verify_paired_dominating(p4, overlap).reason, VerifyReason::not_partition);
  PairedSolution unpaired{{1, 2, 3, 4}, {{1, 2}}};
  EXPECT_EQ(verify_paired_dominating(p4, unpaired).reason, VerifyReason::not_partition);
  PairedSolution outside{{2, 9}, {{2, 9}}};
  EXPECT_EQ(verify_paired_dominating(p4, outside).reason, VerifyReason::not_partition);
  EXPECT_STREQ(to_string(VerifyReason::non_edge_pair), "non-edge-pair");
}

TEST(Verify, ImpliesDomination) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    Graph g = gen::random_connected_graph(n, 30, rng);
    auto edges = g.edges();
    std::vector<Edge> pick;
    for (auto e : edges)
      if (rng.chance(1, 3)) pick.push_back(e);
    PairedSolution sol = PairedSolution::from_pairs(pick);
    if (verify_paired_dominating(g, sol)) {
      EXPECT_TRUE(is_dominating(g, sol.vertices));
    }
  }
}

TEST(CliqueMatching, Examples) {
  const Graph k3 = complete_graph(3);
  std::vector<std::vector<Vertex>> one{{1, 2, 3}};
  auto r = max_matching_clique_union(k3, std::vector<Vertex>{1, 2, 3}, one);
  EXPECT_EQ(r.pairs, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(r.unmatched, (std::vector<Vertex>{3}));

  const Graph two = make_graph(4, {{1, 2}, {3, 4}});
  std::vector<std::vector<Vertex>> parts{{1, 2}, {3, 4}};
  r = max_matching_clique_union(two, std::vector<Vertex>{1, 2, 3, 4}, parts);
  EXPECT_EQ(r.pairs, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_TRUE(r.unmatched.empty());

  // {1} alone plus K5 on 2..6
  std::vector<Edge> e;
  for (Vertex u = 2; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v) e.emplace_back(u, v);
  const Graph g = make_graph(6, e);
  std::vector<std::vector<Vertex>> split{{1}, {2, 3, 4, 5, 6}};
  r = max_matching_clique_union(g, std::vector<Vertex>{1, 2, 3, 4, 5, 6}, split);
  EXPECT_EQ(r.pairs, (std::vector<Edge>{{2, 3}, {4, 5}}));
  EXPECT_EQ(r.unmatched, (std::vector<Vertex>{1, 6}));
  EXPECT_EQ(static_cast<int>(r.pairs.size()), testing::max_matching_by_edge_subsets(g));
}

TEST(CliqueMatching, RejectsBadPartitions) {
  const Graph p3 = path_graph(3);
  std::vector<std::vector<Vertex>> not_clique{{1, 2, 3}};
  EXPECT_THROW(max_matching_clique_union(p3, std::vector<Vertex>{1, 2, 3}, not_clique),
               ArgumentError);
  std::vector<std::vector<Vertex>> partial{{1, 2}};
  EXPECT_THROW(max_matching_clique_union(p3, std::vector<Vertex>{1, 2, 3}, partial),
               ArgumentError);
  std::vector<std::vector<Vertex>> extra{{1, 2}, {3}};
  EXPECT_THROW(max_matching_clique_union(p3, std::vector<Vertex>{1, 2}, extra), ArgumentError);
}

TEST(CliqueMatching, MaximumOnRandomCliqueUnions) {
  gen::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    rng.shuffle(ids);
    std::vector<std::vector<Vertex>> parts;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ids.size();) {
      const auto len = static_cast<std::size_t>(rng.uniform(1, 5));
      std::vector<Vertex> part(ids.begin() + static_cast<std::ptrdiff_t>(i),
                               ids.begin() + static_cast<std::ptrdiff_t>(std::min(ids.size(), i + len)));
      for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b) edges.emplace_back(part[a], part[b]);
      parts.push_back(part);
      i += len;
    }
    const Graph g = make_graph(n, edges);
    auto r = max_matching_clique_union(g, ids, parts);
    EXPECT_EQ(static_cast<int>(r.pairs.size()), testing::max_matching_by_edge_subsets(g));
    EXPECT_EQ(r.pairs.size() * 2 + r.unmatched.size(), ids.size());
  }
}

TEST(SolutionJson, RoundTrip) {
  auto sol = PairedSolution::from_pairs({{5, 3}, {1, 2}});
  EXPECT_EQ(sol.vertices, (std::vector<Vertex>{1, 2, 3, 5}));
  auto doc = solution_to_json(sol);
  EXPECT_EQ(doc.dump(), R"({"pairs":[[1,2],[3,5]],"size":4,"vertices":[1,2,3,5]})");
  EXPECT_EQ(solution_from_json(doc), sol);
  EXPECT_THROW(solution_from_json(nlohmann::json::parse(R"({"vertices":[1]})")), ParseError);
}

} // namespace
} // namespace pairdom
