#pragma once

#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom::reductions {

enum class Variant { bipartite, split };

enum class Part { V1, V2, E1, E2 };

const char *to_string(Variant v);
const char *to_string(Part p);

/// Where a vertex of the constructed graph comes from: copy `part` of source
/// vertex `index` (V1/V2) or of source edge `index` (E1/E2, 1-based into the
/// canonical edge list).
struct Provenance {
  Part part;
  int index;
};

/// Constructed graph G' on 2n + 2m vertices numbered V1 = 1..n,
/// V2 = n+1..2n, E1 = 2n+1..2n+m, E2 = 2n+m+1..2n+2m.
struct ReductionOutput {
  Variant variant;
  Graph source;
  std::vector<Edge> source_edges;
  Graph gprime;
  std::vector<Provenance> provenance;  // indexed by G' id, slot 0 unused

  int n() const { return source.num_vertices(); }
  int m() const { return static_cast<int>(source_edges.size()); }
  Vertex v_copy(int copy, Vertex v) const { return copy == 1 ? v : n() + v; }
  Vertex e_copy(int copy, int k) const {
    return 2 * n() + (copy == 1 ? k : m() + k);
  }
};

/// V1 x V2 complete bipartite plus incidence edges within each copy.
/// Throws InstanceError on an edgeless source.
ReductionOutput reduce_bipartite(const Graph &g);

/// V1 u V2 made a clique plus incidence edges within each copy; the result
/// is a split graph. Throws InstanceError on an edgeless source.
ReductionOutput reduce_split(const Graph &g);

ReductionOutput reduce(const Graph &g, Variant v);

/// Both copies of every cover vertex, each v^1 paired with its v^2.
/// Throws ArgumentError if `cover` is not a vertex cover of the source.
PairedSolution vc_to_pd_witness(const ReductionOutput &red,
                                const std::vector<Vertex> &cover);

/// Vertex cover of the source with at most |pd|/2 vertices. Edge copies in
/// `pd` are swapped for unused vertex copies on the other side before the
/// projection. Throws ArgumentError if `pd` is not paired-dominating in G'.
std::vector<Vertex> pd_to_vc_witness(const ReductionOutput &red,
                                     const PairedSolution &pd);

bool is_bipartite(const Graph &g);

/// `clique` is a clique and every other vertex is pairwise non-adjacent.
bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique);

/// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph &g);

} // namespace pairdom::reductions
