#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

inline constexpr int kDefaultMatchingLimit = 24;

/// Exhaustive backtracking: repeatedly match the smallest unmatched vertex to
/// one of its unmatched neighbors. Meant for oracle-sized graphs only; graphs
/// with more than `max_vertices` vertices raise CapacityError.
bool has_perfect_matching(const Graph &g,
                          int max_vertices = kDefaultMatchingLimit);

/// Perfect matching of G[s] for graphs of at most 64 vertices, with `s` a
/// bitmask (bit v-1 for vertex v) and `nbr_bits[v-1]` the neighborhood mask
/// of v. Same search order as has_perfect_matching.
struct MaskMatching {
  bool found = false;
  std::vector<Edge> pairs;
};
MaskMatching perfect_matching_mask(std::span<const std::uint64_t> nbr_bits,
                                   std::uint64_t s);

struct CliqueMatching {
  std::vector<Edge> pairs;
  std::vector<Vertex> unmatched;
};

/// Maximum matching of G[s] when G[s] is a disjoint union of cliques. Each
/// clique is paired off in ascending id order; an odd clique leaves its
/// largest id unmatched. Pairs and unmatched vertices come back sorted.
/// Throws ArgumentError if `cliques` does not partition `s` or some part is
/// not a clique of `g`.
CliqueMatching max_matching_clique_union(
    const Graph &g, std::span<const Vertex> s,
    std::span<const std::vector<Vertex>> cliques);

} // namespace pairdom
