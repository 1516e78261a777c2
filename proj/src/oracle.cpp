#include "pairdom/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "pairdom/errors.hpp"
#include "pairdom/matching.hpp"

namespace pairdom::oracle {

namespace {

void check_budget(const Graph &g, const OracleBudget &budget, const char *what) {
  const int n = g.num_vertices();
  const int limit = std::min(budget.max_vertices, kMaxOracleVertices);
  if (n > limit)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceeds the oracle limit of " + std::to_string(limit));
}

std::vector<std::uint64_t> neighbor_masks(const Graph &g) {
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 1; v <= g.num_vertices(); ++v)
    for (Vertex w : g.neighbors(v)) nbr[v - 1] |= std::uint64_t{1} << (w - 1);
  return nbr;
}

/// Visits every k-subset of {0..n-1} in lexicographic order until `visit`
/// returns true. Returns whether a visit succeeded.
template <typename Visit>
bool for_each_subset(int n, int k, std::uint64_t &counter, std::uint64_t cap,
                     Visit &&visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (++counter > cap)
      throw CapacityError("oracle enumeration exceeded " + std::to_string(cap) + " subsets");
    std::uint64_t mask = 0;
    for (int i : idx) mask |= std::uint64_t{1} << i;
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

} // namespace

PairedSolution gamma_p_bruteforce(const Graph &g, const OracleBudget &budget) {
  check_budget(g, budget, "gamma_p");
  const int n = g.num_vertices();
  if (n == 0 || g.has_isolated_vertex())
    throw InstanceError("paired domination needs a graph without isolated vertices");

  const auto nbr = neighbor_masks(g);
  std::vector<std::uint64_t> closed(nbr);
  for (int v = 0; v < n; ++v) closed[v] |= std::uint64_t{1} << v;
  const std::uint64_t all = full_mask(n);

  std::uint64_t counter = 0;
  PairedSolution best;
  for (int k = 2; k <= n; k += 2) {
    bool found = for_each_subset(n, k, counter, budget.max_subsets, [&](std::uint64_t s) {
      std::uint64_t reach = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1)
        reach |= closed[std::countr_zero(rest)];
      if (reach != all) return false;
      auto pm = perfect_matching_mask(nbr, s);
      if (!pm.found) return false;
      best = PairedSolution::from_pairs(std::move(pm.pairs));
      return true;
    });
    if (found) return best;
  }
  // Unreachable for isolate-free graphs: a maximal matching is paired-dominating.
  throw std::logic_error("gamma_p: no paired-dominating set found");
}

std::vector<Vertex> min_vertex_cover_bruteforce(const Graph &g, const OracleBudget &budget) {
  check_budget(g, budget, "vertex cover");
  const int n = g.num_vertices();
  const auto nbr = neighbor_masks(g);
  std::uint64_t counter = 0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t hit = 0;
    auto covers = [&](std::uint64_t c) {
      for (std::uint64_t out = full_mask(n) & ~c; out; out &= out - 1)
        if (nbr[std::countr_zero(out)] & ~c) return false;
      hit = c;
      return true;
    };
    bool found = k == 0 ? (++counter, covers(0))
                        : for_each_subset(n, k, counter, budget.max_subsets, covers);
    if (found) {
      std::vector<Vertex> cover;
      for (std::uint64_t rest = hit; rest; rest &= rest - 1)
        cover.push_back(std::countr_zero(rest) + 1);
      return cover;
    }
  }
  throw std::logic_error("vertex cover: enumeration exhausted");
}

bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex v : cover) {
    if (!g.contains(v)) return false;
    in[v] = 1;
  }
  for (auto [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

} // namespace pairdom::oracle
