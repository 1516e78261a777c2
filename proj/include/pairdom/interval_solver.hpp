#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom::interval {

using Coord = std::int64_t;

/// Closed interval [left, right] owned by vertex `id`.
struct Interval {
  Vertex id;
  Coord left;
  Coord right;

  friend bool operator==(const Interval &, const Interval &) = default;
};

/// Interval representation; ids are 1..n in input order.
struct IntervalRep {
  std::vector<Interval> intervals;

  int size() const { return static_cast<int>(intervals.size()); }
};

/// Text format: "n" on the first line, then n lines "a b" with a <= b.
/// '#' lines are comments. Errors raise ParseError naming the line.
IntervalRep parse_intervals(std::string_view text);
std::string serialize_intervals(const IntervalRep &rep);

/// Vertices u_1..u_n by increasing left endpoint (ties: right endpoint, then
/// id). father[id] is the lowest-positioned earlier neighbor; u_1 is its own
/// father. Arrays indexed by id are sized n + 1.
struct LeftOrdering {
  std::vector<Vertex> order;
  std::vector<int> position;  // id -> 1-based index
  std::vector<Vertex> father;
};

struct IntervalGraph {
  Graph graph;
  LeftOrdering ordering;
};

/// Intersection graph of the closed intervals plus its left-endpoint
/// ordering. Throws InstanceError if the graph is disconnected.
IntervalGraph interval_graph(const IntervalRep &rep);

/// Same, without the connectivity requirement (u_i with no earlier neighbor
/// is its own father).
IntervalGraph interval_graph_unchecked(const IntervalRep &rep);

/// u_i u_j in E with j < i implies u_j u_k in E for all j < k <= i.
bool has_left_closure(const Graph &g, const LeftOrdering &ord);

/// Minimum paired-dominating set of a connected interval graph (n >= 2),
/// sweeping the ordering from the right end. Throws InstanceError otherwise.
PairedSolution mpdi(const Graph &g, const LeftOrdering &ord);
PairedSolution mpdi(const IntervalRep &rep);

} // namespace pairdom::interval
