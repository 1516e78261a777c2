#include "pairdom/matching.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "pairdom/errors.hpp"

namespace pairdom {

namespace {

class MaskMatcher {
public:
  explicit MaskMatcher(std::span<const std::uint64_t> nbr) : nbr_(nbr) {}

  bool solve(std::uint64_t s, std::vector<Edge> &pairs) {
    if (s == 0) return true;
    if (std::popcount(s) % 2 != 0 || failed_.contains(s)) return false;
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    std::uint64_t candidates = nbr_[v] & rest;
    while (candidates) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      pairs.emplace_back(v + 1, w + 1);
      if (solve(rest & ~(std::uint64_t{1} << w), pairs)) return true;
      pairs.pop_back();
    }
    failed_.insert(s);
    return false;
  }

private:
  std::span<const std::uint64_t> nbr_;
  std::unordered_set<std::uint64_t> failed_;
};

} // namespace

MaskMatching perfect_matching_mask(std::span<const std::uint64_t> nbr_bits,
                                   std::uint64_t s) {
  MaskMatching out;
  MaskMatcher matcher(nbr_bits);
  out.found = matcher.solve(s, out.pairs);
  if (!out.found) out.pairs.clear();
  return out;
}

bool has_perfect_matching(const Graph &g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 64)
    throw CapacityError("perfect matching search limited to " +
                        std::to_string(std::min(max_vertices, 64)) +
                        " vertices, graph has " + std::to_string(n));
  if (n % 2 != 0) return false;
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v - 1] |= std::uint64_t{1} << (w - 1);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return perfect_matching_mask(nbr, all).found;
}

CliqueMatching max_matching_clique_union(const Graph &g, std::span<const Vertex> s,
                                         std::span<const std::vector<Vertex>> cliques) {
  const int n = g.num_vertices();
  // 1 = member of s not yet assigned, 2 = assigned to a part
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : s) {
    if (!g.contains(v)) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    if (state[v]) throw ArgumentError("vertex " + std::to_string(v) + " repeated in set");
    state[v] = 1;
  }
  std::vector<char> mark(static_cast<std::size_t>(n) + 1, 0);
  CliqueMatching out;
  for (const auto &part : cliques) {
    for (Vertex v : part) {
      if (!g.contains(v) || state[v] != 1)
        throw ArgumentError("partition part contains " + std::to_string(v) +
                            " which is not an unassigned member of the set");
      state[v] = 2;
      mark[v] = 1;
    }
    for (Vertex v : part) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += mark[w];
      if (inside + 1 != part.size())
        throw ArgumentError("partition part containing " + std::to_string(v) +
                            " is not a clique");
    }
    for (Vertex v : part) mark[v] = 0;

    std::vector<Vertex> sorted(part.begin(), part.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); i += 2)
      out.pairs.emplace_back(sorted[i], sorted[i + 1]);
    if (sorted.size() % 2 != 0) out.unmatched.push_back(sorted.back());
  }
  for (Vertex v : s)
    if (state[v] != 2)
      throw ArgumentError("vertex " + std::to_string(v) + " not covered by the partition");
  std::sort(out.pairs.begin(), out.pairs.end());
  std::sort(out.unmatched.begin(), out.unmatched.end());
  return out;
}

} // namespace pairdom
