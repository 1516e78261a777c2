#include <gtest/gtest.h>

#include "pairdom/errors.hpp"
#include "pairdom/generators.hpp"
#include "pairdom/oracle.hpp"
#include "test_support.hpp"

namespace pairdom {
namespace {

using oracle::gamma_p_bruteforce;
using oracle::min_vertex_cover_bruteforce;
using testing::complete_graph;
using testing::make_graph;
using testing::path_graph;

/// Independent minimality check: no paired-dominating set of size k exists,
/// using the edge-subset matcher on each induced subgraph.
bool exists_pd_of_size(const Graph &g, int k) {
  const int n = g.num_vertices();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v + 1);
    if (is_dominating(g, s) && testing::perfect_matching_by_edge_subsets(g.induced(s)))
      return true;
  }
  return false;
}

TEST(GammaP, Examples) {
  auto k2 = gamma_p_bruteforce(complete_graph(2));
  EXPECT_EQ(k2.vertices, (std::vector<Vertex>{1, 2}));
  auto p4 = gamma_p_bruteforce(path_graph(4));
  EXPECT_EQ(p4.vertices, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(p4.pairs, (std::vector<Edge>{{2, 3}}));
  auto cex = gamma_p_bruteforce(testing::cex6_graph());
  EXPECT_EQ(cex.vertices, (std::vector<Vertex>{3, 5}));
}

TEST(GammaP, Errors) {
  EXPECT_THROW(gamma_p_bruteforce(make_graph(3, {{1, 2}})), InstanceError);
  EXPECT_THROW(gamma_p_bruteforce(path_graph(17)), CapacityError);
  oracle::OracleBudget tight{16, 10};
  EXPECT_THROW(gamma_p_bruteforce(path_graph(12), tight), CapacityError);
}

TEST(GammaP, CompleteGraphsAndStars) {
  for (int n = 2; n <= 9; ++n) {
    EXPECT_EQ(gamma_p_bruteforce(complete_graph(n)).size(), 2u) << n;
    EXPECT_EQ(gamma_p_bruteforce(testing::star_graph(n, n)).size(), 2u) << n;
  }
}

TEST(GammaP, ValidEvenAndMinimalOnRandomGraphs) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    const Graph g = gen::random_connected_graph(n, static_cast<int>(rng.uniform(0, 60)), rng);
    const auto sol = gamma_p_bruteforce(g);
    ASSERT_TRUE(verify_paired_dominating(g, sol));
    EXPECT_EQ(sol.size() % 2, 0u);
    EXPECT_GE(sol.size(), 2u);
    EXPECT_FALSE(exists_pd_of_size(g, static_cast<int>(sol.size()) - 2));
  }
}

TEST(VertexCover, Examples) {
  EXPECT_EQ(min_vertex_cover_bruteforce(complete_graph(2)), (std::vector<Vertex>{1}));
  EXPECT_EQ(min_vertex_cover_bruteforce(complete_graph(3)), (std::vector<Vertex>{1, 2}));
  // {1,3} is the lexicographically first of the two optima {1,3} and {2,3}
  EXPECT_EQ(min_vertex_cover_bruteforce(path_graph(4)), (std::vector<Vertex>{1, 3}));
  EXPECT_TRUE(min_vertex_cover_bruteforce(make_graph(3, {})).empty());
  EXPECT_THROW(min_vertex_cover_bruteforce(path_graph(21)), CapacityError);
}

TEST(VertexCover, MinimalOnRandomGraphs) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 9));
    const Graph g = gen::random_connected_graph(n, 40, rng);
    const auto cover = min_vertex_cover_bruteforce(g);
    EXPECT_TRUE(oracle::is_vertex_cover(g, cover));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) + 1 != static_cast<int>(cover.size())) continue;
      std::vector<Vertex> smaller;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) smaller.push_back(v + 1);
      EXPECT_FALSE(oracle::is_vertex_cover(g, smaller));
    }
  }
}

} // namespace
} // namespace pairdom
