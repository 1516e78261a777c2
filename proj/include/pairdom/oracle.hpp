#pragma once

#include <cstdint>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom::oracle {

/// Bounds for the exhaustive solvers. Exceeding either raises CapacityError.
struct OracleBudget {
  int max_vertices = 16;
  std::uint64_t max_subsets = 2'000'000'000ULL;

  static OracleBudget for_reductions() { return {20, 2'000'000'000ULL}; }
};

/// Hard upper bound on max_vertices: candidate sets are 64-bit masks.
inline constexpr int kMaxOracleVertices = 64;

/// Minimum paired-dominating set by enumeration of even-sized subsets in
/// ascending size, lexicographic order within a size. The first hit is
/// returned, so the result is the lexicographically smallest optimum.
/// Throws InstanceError if `g` has an isolated vertex.
PairedSolution gamma_p_bruteforce(const Graph &g, const OracleBudget &budget = {});

/// Minimum vertex cover, same enumeration discipline as gamma_p_bruteforce.
std::vector<Vertex> min_vertex_cover_bruteforce(
    const Graph &g, const OracleBudget &budget = OracleBudget::for_reductions());

bool is_vertex_cover(const Graph &g, const std::vector<Vertex> &cover);

} // namespace pairdom::oracle
