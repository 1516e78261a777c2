#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom::block {

/// Maximal 2-connected components (bridges count as K2 blocks) and the cut
/// vertices joining them. Each block's vertex list is sorted ascending; blocks
/// are ordered by their smallest vertex, then lexicographically.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
  /// Edge count inside each block, parallel to `blocks`.
  std::vector<std::size_t> block_edges;
};

/// Single iterative DFS with low-link values, O(n + m).
/// Throws InstanceError on a disconnected or empty graph.
BlockDecomposition block_cut_decomposition(const Graph &g);

/// Connected graph whose every block is complete.
bool is_block_graph(const Graph &g);
bool is_tree(const Graph &g);

/// Vertex order v_1..v_n in which the later neighbors of any vertex are
/// pairwise adjacent, with the father/children structure derived from it.
/// Arrays indexed by vertex id are sized n + 1; slot 0 is unused.
struct EliminationOrdering {
  std::vector<Vertex> order;
  std::vector<int> position;           // id -> 1-based index in `order`
  std::vector<Vertex> father;          // id -> highest later neighbor, 0 for v_n
  std::vector<std::vector<Vertex>> children;  // id -> ascending ids
  /// id -> group of the clique the vertex was emitted with. Children of the
  /// same vertex that share a group are adjacent; different groups are not.
  std::vector<int> group;

  Vertex last() const { return order.back(); }
};

/// Peels end blocks inward in linear time. The block-cut tree is rooted at
/// the last block of the decomposition order and blocks are peeled in reverse
/// breadth-first order, siblings ascending. A peeled block emits its
/// vertices, minus the cut vertex that attaches it to the rest, with former
/// cut vertices first and each group ascending. The root block ends with its
/// largest former cut vertex, which becomes v_n.
/// Throws InstanceError unless `g` is a block graph with n >= 2.
EliminationOrdering block_elimination_ordering(const Graph &g);

/// Non-increasing distance from the root, which is vertex n: reverse of a BFS
/// that scans neighbors ascending. Throws InstanceError unless `g` is a tree
/// with n >= 2.
EliminationOrdering tree_ordering(const Graph &g);

/// For all i < j < k: v_i v_j, v_i v_k in E implies v_j v_k in E. Checked by
/// testing that the later neighbors of each vertex meet the earliest of them.
bool has_closure_property(const Graph &g, const EliminationOrdering &ord);

/// Per-vertex solver state, indexed by id (slot 0 unused).
/// D: 1 once dominated. L: 0 not chosen, 1 chosen without a partner yet,
/// 2 chosen and paired. `partner` is set exactly when L = 2.
struct VertexLabels {
  std::vector<std::uint8_t> dominated;
  std::vector<std::uint8_t> level;
  std::vector<std::optional<Vertex>> partner;
};

struct LabelingResult {
  EliminationOrdering ordering;
  VertexLabels labels;
  PairedSolution solution;
};

/// Minimum paired-dominating set of a connected block graph (n >= 2) by the
/// child-label sweep over block_elimination_ordering.
LabelingResult mpdb_labeled(const Graph &g);
PairedSolution mpdb(const Graph &g);

/// Same sweep on a caller-supplied ordering. The ordering must satisfy the
/// closure property and carry the clique groups of block_elimination_ordering.
LabelingResult mpdb_labeled(const Graph &g, EliminationOrdering ord);

/// Tree specialization: the children marked 1 never contain an edge, so no
/// clique matching step is needed. Uses tree_ordering.
LabelingResult mpdt_labeled(const Graph &g);
PairedSolution mpdt(const Graph &g);

} // namespace pairdom::block
