#include <gtest/gtest.h>

#include <algorithm>

#include "pairdom/errors.hpp"
#include "pairdom/generators.hpp"
#include "pairdom/interval_solver.hpp"
#include "pairdom/legacy_mpd.hpp"
#include "pairdom/oracle.hpp"
#include "test_support.hpp"

namespace pairdom::interval {
namespace {

const char *kCex6Text = "6\n0 3\n1 4\n2 6\n7 9\n5 10\n8 11\n";

bool intersects(const Interval &x, const Interval &y) {
  return x.left <= y.right && y.left <= x.right;
}

std::vector<Edge> naive_edges(const IntervalRep &rep) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rep.intervals.size(); ++i)
    for (std::size_t j = i + 1; j < rep.intervals.size(); ++j)
      if (intersects(rep.intervals[i], rep.intervals[j]))
        out.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
  return out;
}

IntervalRep random_rep(gen::Rng &rng, int lo, int hi) {
  const int n = static_cast<int>(rng.uniform(lo, hi));
  return gen::random_intervals(n, rng.uniform(1, 12), rng);
}

TEST(ParseIntervals, Examples) {
  const auto rep = parse_intervals(kCex6Text);
  EXPECT_EQ(rep.intervals, counterexample_cex6().intervals);
  EXPECT_EQ(parse_intervals(serialize_intervals(rep)).intervals, rep.intervals);
  EXPECT_THROW(parse_intervals("2\n5 4\n"), ParseError);
  EXPECT_THROW(parse_intervals("2\n1 4\n"), ParseError);
  EXPECT_THROW(parse_intervals("1\n1 4\n2 3\n"), ParseError);
  EXPECT_THROW(parse_intervals("0\n"), ParseError);
  EXPECT_EQ(parse_intervals("# c\n2\n\n1 4\n-3 1\n").intervals[1], (Interval{2, -3, 1}));
  try {
    parse_intervals("2\n1 2\n5 4\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(IntervalGraph, Cex6) {
  const auto ig = interval_graph(counterexample_cex6());
  EXPECT_EQ(ig.graph.edges(),
            (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {3, 5}, {4, 5}, {4, 6}, {5, 6}}));
  EXPECT_EQ(ig.ordering.order, (std::vector<Vertex>{1, 2, 3, 5, 4, 6}));
  EXPECT_EQ(ig.ordering.father[6], 5);
  EXPECT_EQ(ig.ordering.father[5], 3);
  EXPECT_EQ(ig.ordering.father[3], 1);
  EXPECT_EQ(ig.ordering.father[1], 1);
}

TEST(IntervalGraph, DisjointAndNested) {
  EXPECT_THROW(interval_graph(parse_intervals("2\n0 1\n2 3\n")), InstanceError);
  EXPECT_NO_THROW(interval_graph_unchecked(parse_intervals("2\n0 1\n2 3\n")));
  const auto ig = interval_graph(parse_intervals("3\n0 10\n1 2\n3 4\n"));
  EXPECT_EQ(ig.graph.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
  // Touching endpoints intersect.
  EXPECT_EQ(interval_graph(parse_intervals("2\n0 1\n1 3\n")).graph.num_edges(), 1u);
}

TEST(IntervalGraph, MatchesPairwiseCheckAndLeftClosure) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rep = random_rep(rng, 1, 30);
    const auto ig = interval_graph(rep);
    EXPECT_EQ(ig.graph.edges(), naive_edges(rep));
    EXPECT_TRUE(has_left_closure(ig.graph, ig.ordering));
    EXPECT_TRUE(testing::left_closure_by_triples(ig.graph, ig.ordering.order));
    const auto &ord = ig.ordering;
    for (std::size_t i = 1; i < ord.order.size(); ++i) {
      const auto &p = rep.intervals[ord.order[i - 1] - 1];
      const auto &q = rep.intervals[ord.order[i] - 1];
      EXPECT_LE(std::tie(p.left, p.right, p.id), std::tie(q.left, q.right, q.id));
    }
    for (Vertex v : ord.order) {
      Vertex expect = v;
      for (Vertex w : ig.graph.neighbors(v))
        if (ord.position[w] < ord.position[expect]) expect = w;
      EXPECT_EQ(ord.father[v], expect);
    }
  }
}

TEST(IntervalGraph, TiedEndpointsKeepLeftClosure) {
  gen::Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 14));
    IntervalRep rep;
    for (int i = 1; i <= n; ++i) {
      const Coord a = rng.uniform(0, 4);
      rep.intervals.push_back({i, a, a + rng.uniform(0, 3)});
    }
    const auto ig = interval_graph_unchecked(rep);
    EXPECT_TRUE(has_left_closure(ig.graph, ig.ordering));
    EXPECT_TRUE(testing::left_closure_by_triples(ig.graph, ig.ordering.order));
  }
}

TEST(Mpdi, Examples) {
  const auto cex = mpdi(counterexample_cex6());
  EXPECT_EQ(cex.vertices, (std::vector<Vertex>{3, 5}));
  EXPECT_EQ(cex.pairs, (std::vector<Edge>{{3, 5}}));
  const auto k2 = mpdi(parse_intervals("2\n0 2\n1 3\n"));
  EXPECT_EQ(k2.vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_THROW(mpdi(parse_intervals("1\n0 2\n")), InstanceError);
  EXPECT_THROW(mpdi(parse_intervals("2\n0 1\n2 3\n")), InstanceError);
}

TEST(Mpdi, MatchesOracleOnRandomInstances) {
  gen::Rng rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const auto rep = random_rep(rng, 2, 12);
    const auto ig = interval_graph(rep);
    const auto sol = mpdi(ig.graph, ig.ordering);
    ASSERT_TRUE(verify_paired_dominating(ig.graph, sol));
    ASSERT_EQ(sol.size(), oracle::gamma_p_bruteforce(ig.graph).size());
  }
}

TEST(Mpdi, ValidOnLargerInstances) {
  gen::Rng rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rep = random_rep(rng, 2, 400);
    const auto ig = interval_graph(rep);
    const auto sol = mpdi(rep);
    EXPECT_TRUE(verify_paired_dominating(ig.graph, sol));
    EXPECT_EQ(sol, mpdi(ig.graph, ig.ordering));
  }
}

std::vector<Vertex> prefix(const LeftOrdering &ord, int i) {
  return {ord.order.begin(), ord.order.begin() + i};
}

TEST(Prefixes, MonotoneOptimum) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ig = interval_graph(random_rep(rng, 3, 10));
    const int n = ig.graph.num_vertices();
    std::size_t last = 0;
    for (int i = 2; i <= n; ++i) {
      const Graph sub = ig.graph.induced(prefix(ig.ordering, i));
      ASSERT_TRUE(sub.is_connected());
      const std::size_t here = oracle::gamma_p_bruteforce(sub).size();
      EXPECT_GE(here, last) << "prefix " << i;
      last = here;
    }
  }
}

TEST(Prefixes, FatherOfFatherIsFirstGivesTwo) {
  gen::Rng rng(12);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto ig = interval_graph(random_rep(rng, 3, 10));
    const auto &ord = ig.ordering;
    for (int i = 2; i <= ig.graph.num_vertices(); ++i) {
      const Vertex u = ord.order[i - 1];
      const Vertex f = ord.father[u];
      if (f == u || ord.father[f] != f) continue;
      ++hits;
      const Graph sub = ig.graph.induced(prefix(ord, i));
      EXPECT_EQ(oracle::gamma_p_bruteforce(sub).size(), 2u);
    }
  }
  EXPECT_GT(hits, 0);
}

TEST(Legacy, Cex6TableAndTrace) {
  const auto r = legacy_mpd(counterexample_cex6());
  EXPECT_EQ(r.result, (std::vector<Vertex>{4, 5, 1, 2}));
  ASSERT_EQ(r.table.size(), 8u);
  const auto &row3 = r.table[2];
  EXPECT_EQ(row3.overlap_min_left, 1);
  const auto &row4 = r.table[3];
  EXPECT_EQ(row4.max_left_before, 2);
  EXPECT_EQ(row4.left_set, (std::vector<Coord>{7, 8}));
  const auto &row5 = r.table[4];
  EXPECT_EQ(row5.left, 5);
  EXPECT_EQ(row5.right, 10);
  EXPECT_EQ(row5.max_left_before, 1);
  EXPECT_EQ(row5.overlap_min_left, 3);
  EXPECT_TRUE(row5.left_set.empty());
  EXPECT_EQ(r.table[0].left_set, (std::vector<Coord>{1, 2}));
  EXPECT_EQ(r.table[2].left_set, (std::vector<Coord>{5}));

  const std::vector<int> expect_l{2, 1, 1, 5, 3, 5, 8, 7};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(r.table[i].overlap_min_left, expect_l[i]) << i + 1;

  ASSERT_EQ(r.steps.size(), 8u);
  EXPECT_EQ(r.steps[3].k, 1);
  EXPECT_EQ(r.steps[3].set, (std::vector<int>{4, 5, 1, 2}));
  EXPECT_EQ(r.steps[7].set, (std::vector<int>{7, 8, 4, 5, 1, 2}));
  EXPECT_EQ(r.steps[6].k, 4);
}

TEST(Legacy, SuboptimalOnCex6ButDominating) {
  const auto rep = counterexample_cex6();
  const auto ig = interval_graph(rep);
  const auto r = legacy_mpd(rep);
  EXPECT_TRUE(is_dominating(ig.graph, r.result));
  EXPECT_GT(r.result.size(), mpdi(rep).size());
}

TEST(Legacy, ResultIsWellFormed) {
  // The published program is not guaranteed to dominate, so only the shape of
  // its output is checked here.
  gen::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rep = random_rep(rng, 2, 12);
    const auto r = legacy_mpd(rep);
    EXPECT_EQ(r.table.size(), rep.intervals.size() + 2);
    EXPECT_EQ(r.steps.size(), rep.intervals.size() + 2);
    std::vector<Vertex> s = r.result;
    std::sort(s.begin(), s.end());
    EXPECT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (Vertex v : s) {
      EXPECT_GE(v, 1);
      EXPECT_LE(v, rep.size());
    }
  }
}

} // namespace
} // namespace pairdom::interval
