#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pairdom {

/// Vertex ids are 1-based throughout the public interface.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 1..n, stored as CSR with
/// every neighbor list sorted ascending.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// (in either orientation) and out-of-range ids with ArgumentError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v - 1], adj_.data() + offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v] - offsets_[v - 1]; }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// O(log deg) lookup.
  bool adjacent(Vertex u, Vertex v) const;

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;
  bool is_connected() const;

  /// Subgraph induced by `vertices` (distinct ids); vertex i of the result
  /// is vertices[i-1].
  Graph induced(std::span<const Vertex> vertices) const;
  /// Isomorphic copy in which vertex v is renamed new_id[v]. `new_id` has
  /// n + 1 entries (slot 0 ignored) and must be a permutation of 1..n.
  Graph relabeled(std::span<const Vertex> new_id) const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// A candidate paired-dominating set together with its pairing. This is a
/// plain value: it can hold an invalid state, which verify_paired_dominating
/// reports.
struct PairedSolution {
  std::vector<Vertex> vertices;
  std::vector<Edge> pairs;

  std::size_t size() const { return vertices.size(); }

  /// Orders each pair (low, high), sorts the pairs, and derives `vertices`.
  static PairedSolution from_pairs(std::vector<Edge> pairs);

  friend bool operator==(const PairedSolution &,
                         const PairedSolution &) = default;
};

enum class VerifyReason { ok, not_dominating, not_partition, non_edge_pair };

struct VerifyResult {
  bool valid = false;
  VerifyReason reason = VerifyReason::ok;

  explicit operator bool() const { return valid; }
};

const char *to_string(VerifyReason reason);

/// True iff every vertex is in `s` or has a neighbor in `s`.
/// Throws ArgumentError on ids outside 1..n.
bool is_dominating(const Graph &g, std::span<const Vertex> s);

/// Checks that `sol.pairs` partitions `sol.vertices` into edges of `g` and
/// that `sol.vertices` dominates `g`.
VerifyResult verify_paired_dominating(const Graph &g, const PairedSolution &sol);

} // namespace pairdom
