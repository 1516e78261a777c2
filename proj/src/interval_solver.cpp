#include "pairdom/interval_solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "pairdom/errors.hpp"
#include "pairdom/text_lines.hpp"

namespace pairdom::interval {

IntervalRep parse_intervals(std::string_view text) {
  detail::LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(0, "empty input, expected interval count");
  const auto n = detail::parse_fields(*header, 1, "interval count \"n\"")[0];
  if (n < 1 || n > 100'000'000) throw ParseError(header->number, "interval count out of range");
  IntervalRep rep;
  rep.intervals.reserve(static_cast<std::size_t>(n));
  while (auto line = reader.next()) {
    if (rep.size() == n)
      throw ParseError(line->number, "more than " + std::to_string(n) + " interval lines");
    auto ab = detail::parse_fields(*line, 2, "interval \"a b\"");
    if (ab[0] > ab[1])
      throw ParseError(line->number, "left endpoint exceeds right endpoint");
    rep.intervals.push_back({rep.size() + 1, ab[0], ab[1]});
  }
  if (rep.size() != n)
    throw ParseError(0, "expected " + std::to_string(n) + " interval lines, found " +
                            std::to_string(rep.size()));
  return rep;
}

std::string serialize_intervals(const IntervalRep &rep) {
  std::ostringstream out;
  out << rep.size() << '\n';
  for (const auto &iv : rep.intervals) out << iv.left << ' ' << iv.right << '\n';
  return out.str();
}

namespace {

std::vector<Interval> left_order(const IntervalRep &rep) {
  const int n = rep.size();
  for (int i = 0; i < n; ++i)
    if (rep.intervals[i].id != i + 1)
      throw ArgumentError("interval ids must be 1..n in order");
  auto sorted = rep.intervals;
  std::sort(sorted.begin(), sorted.end(), [](const Interval &a, const Interval &b) {
    return std::tie(a.left, a.right, a.id) < std::tie(b.left, b.right, b.id);
  });
  return sorted;
}

// With by_position the vertex at left-order position p is labeled p, which
// keeps every neighborhood close in memory.
IntervalGraph build(const std::vector<Interval> &sorted, bool by_position) {
  const int n = static_cast<int>(sorted.size());
  auto label = [&](int p) { return by_position ? p + 1 : sorted[p].id; };

  // Left endpoints are sorted, so the later intervals meeting position p form
  // the contiguous run whose left endpoint is at most p's right endpoint.
  std::vector<Edge> edges;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n && sorted[q].left <= sorted[p].right; ++q)
      edges.emplace_back(label(p), label(q));
  }

  IntervalGraph out;
  out.graph = Graph::from_edges(n, edges);
  auto &ord = out.ordering;
  ord.order.resize(static_cast<std::size_t>(n));
  ord.position.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p < n; ++p) {
    ord.order[p] = label(p);
    ord.position[label(p)] = p + 1;
  }
  ord.father.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    Vertex best = u;
    for (Vertex w : out.graph.neighbors(u))
      if (ord.position[w] < ord.position[best]) best = w;
    ord.father[u] = best;
  }
  return out;
}

void require_connected(const LeftOrdering &ord) {
  for (std::size_t p = 1; p < ord.order.size(); ++p) {
    const Vertex u = ord.order[p];
    if (ord.father[u] == u)
      throw InstanceError("interval graph is disconnected (interval " + std::to_string(u) +
                          " meets no interval starting earlier)");
  }
}

} // namespace

IntervalGraph interval_graph_unchecked(const IntervalRep &rep) {
  return build(left_order(rep), false);
}

IntervalGraph interval_graph(const IntervalRep &rep) {
  auto out = interval_graph_unchecked(rep);
  require_connected(out.ordering);
  return out;
}

bool has_left_closure(const Graph &g, const LeftOrdering &ord) {
  // Equivalent form: the later neighbors of each u_j occupy exactly the
  // positions j+1..r for some r.
  const int n = g.num_vertices();
  if (static_cast<int>(ord.order.size()) != n) return false;
  for (Vertex u = 1; u <= n; ++u) {
    const int j = ord.position[u];
    int later = 0, reach = j;
    for (Vertex w : g.neighbors(u))
      if (ord.position[w] > j) {
        ++later;
        reach = std::max(reach, ord.position[w]);
      }
    if (reach - j != later) return false;
  }
  return true;
}

PairedSolution mpdi(const Graph &g, const LeftOrdering &ord) {
  const int n = g.num_vertices();
  if (n < 2) throw InstanceError("need at least two vertices");
  if (static_cast<int>(ord.order.size()) != n ||
      ord.father.size() != static_cast<std::size_t>(n) + 1)
    throw ArgumentError("ordering does not match the graph");
  const auto &F = ord.father;
  for (int p = 1; p < n; ++p)
    if (F[ord.order[p]] == ord.order[p]) throw InstanceError("interval graph is disconnected");

  std::vector<char> dominated(static_cast<std::size_t>(n) + 1, 0);
  auto dominate_closed = [&](Vertex v) {
    dominated[v] = 1;
    for (Vertex w : g.neighbors(v)) dominated[w] = 1;
  };

  std::vector<Edge> pairs;
  int floor = n + 1;  // smallest position used by an earlier pair
  auto add_pair = [&](Vertex a, Vertex b) {
    const int hi = std::max(ord.position[a], ord.position[b]);
    if (hi >= floor) throw std::logic_error("pair positions failed to decrease");
    floor = std::min(ord.position[a], ord.position[b]);
    pairs.emplace_back(a, b);
  };

  for (int i = n; i >= 1; --i) {
    const Vertex u = ord.order[i - 1];
    if (dominated[u]) continue;
    const Vertex f = F[u];
    if (f != u && F[f] != f) {
      add_pair(f, F[f]);
      dominate_closed(f);
      dominate_closed(F[f]);
    } else if (f != u) {
      add_pair(u, f);
      dominate_closed(f);
    } else {
      add_pair(u, ord.order[1]);
      dominated[u] = 1;
    }
  }
  return PairedSolution::from_pairs(std::move(pairs));
}

PairedSolution mpdi(const IntervalRep &rep) {
  const auto sorted = left_order(rep);
  const auto ig = build(sorted, true);
  for (std::size_t p = 1; p < sorted.size(); ++p)
    if (ig.ordering.father[p + 1] == static_cast<Vertex>(p + 1))
      throw InstanceError("interval graph is disconnected (interval " +
                          std::to_string(sorted[p].id) + " meets no interval starting earlier)");
  auto local = mpdi(ig.graph, ig.ordering);
  for (auto &[a, b] : local.pairs) {
    a = sorted[a - 1].id;
    b = sorted[b - 1].id;
  }
  return PairedSolution::from_pairs(std::move(local.pairs));
}

} // namespace pairdom::interval
