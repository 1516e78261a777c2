#include "pairdom/reductions.hpp"

#include <algorithm>
#include <string>

#include "pairdom/errors.hpp"
#include "pairdom/oracle.hpp"

namespace pairdom::reductions {

const char *to_string(Variant v) {
  return v == Variant::bipartite ? "bipartite" : "split";
}

const char *to_string(Part p) {
  switch (p) {
  case Part::V1: return "V1";
  case Part::V2: return "V2";
  case Part::E1: return "E1";
  case Part::E2: return "E2";
  }
  return "?";
}

ReductionOutput reduce(const Graph &g, Variant variant) {
  if (g.num_edges() == 0) throw InstanceError("reduction needs a source graph with an edge");
  ReductionOutput red;
  red.variant = variant;
  red.source = g;
  red.source_edges = g.edges();
  const int n = red.n();
  const int m = red.m();

  std::vector<Edge> edges;
  if (variant == Variant::bipartite) {
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = 1; v <= n; ++v) edges.emplace_back(red.v_copy(1, u), red.v_copy(2, v));
  } else {
    for (Vertex u = 1; u <= 2 * n; ++u)
      for (Vertex v = u + 1; v <= 2 * n; ++v) edges.emplace_back(u, v);
  }
  for (int k = 1; k <= m; ++k) {
    auto [u, v] = red.source_edges[k - 1];
    for (int copy : {1, 2}) {
      edges.emplace_back(red.v_copy(copy, u), red.e_copy(copy, k));
      edges.emplace_back(red.v_copy(copy, v), red.e_copy(copy, k));
    }
  }
  red.gprime = Graph::from_edges(2 * n + 2 * m, edges);

  red.provenance.assign(static_cast<std::size_t>(2 * n + 2 * m) + 1, {Part::V1, 0});
  for (Vertex v = 1; v <= n; ++v) {
    red.provenance[red.v_copy(1, v)] = {Part::V1, v};
    red.provenance[red.v_copy(2, v)] = {Part::V2, v};
  }
  for (int k = 1; k <= m; ++k) {
    red.provenance[red.e_copy(1, k)] = {Part::E1, k};
    red.provenance[red.e_copy(2, k)] = {Part::E2, k};
  }
  return red;
}

ReductionOutput reduce_bipartite(const Graph &g) { return reduce(g, Variant::bipartite); }
ReductionOutput reduce_split(const Graph &g) { return reduce(g, Variant::split); }

PairedSolution vc_to_pd_witness(const ReductionOutput &red, const std::vector<Vertex> &cover) {
  if (!oracle::is_vertex_cover(red.source, cover))
    throw ArgumentError("witness is not a vertex cover of the source graph");
  std::vector<Edge> pairs;
  for (Vertex v : cover) pairs.emplace_back(red.v_copy(1, v), red.v_copy(2, v));
  return PairedSolution::from_pairs(std::move(pairs));
}

std::vector<Vertex> pd_to_vc_witness(const ReductionOutput &red, const PairedSolution &pd) {
  if (!verify_paired_dominating(red.gprime, pd))
    throw ArgumentError("witness is not a paired-dominating set of the reduced graph");
  const int n = red.n();
  std::vector<Vertex> cover;
  if (static_cast<int>(pd.size() / 2) >= n) {
    for (Vertex v = 1; v <= n; ++v) cover.push_back(v);
    return cover;
  }

  const int total = red.gprime.num_vertices();
  std::vector<char> in(static_cast<std::size_t>(total) + 1, 0);
  std::vector<Vertex> partner(static_cast<std::size_t>(total) + 1, 0);
  for (Vertex v : pd.vertices) in[v] = 1;
  for (auto [u, v] : pd.pairs) {
    partner[u] = v;
    partner[v] = u;
  }

  // Swap each edge copy e^c (partnered with some v^c) for the smallest unused
  // vertex copy on the other side, which is adjacent to v^c in both variants.
  for (Vertex x = 2 * n + 1; x <= total; ++x) {
    if (!in[x]) continue;
    const int copy = red.provenance[x].part == Part::E1 ? 1 : 2;
    const int other = 3 - copy;
    Vertex spare = 0;
    for (Vertex v = 1; v <= n && !spare; ++v)
      if (!in[red.v_copy(other, v)]) spare = red.v_copy(other, v);
    if (!spare) continue;
    const Vertex p = partner[x];
    in[x] = 0;
    in[spare] = 1;
    partner[p] = spare;
    partner[spare] = p;
    partner[x] = 0;
  }

  auto project = [&](int copy) {
    std::vector<Vertex> side;
    for (Vertex v = 1; v <= n; ++v)
      if (in[red.v_copy(copy, v)]) side.push_back(v);
    for (int k = 1; k <= red.m(); ++k)
      if (in[red.e_copy(copy, k)]) side.push_back(red.source_edges[k - 1].first);
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    return side;
  };
  auto first = project(1);
  auto second = project(2);
  bool edge_copies_left = false;
  for (Vertex x = 2 * n + 1; x <= total; ++x) edge_copies_left |= in[x] != 0;
  if (red.variant == Variant::bipartite && !edge_copies_left) return first;
  return second.size() < first.size() ? second : first;
}

bool is_bipartite(const Graph &g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbors(queue[h])) {
        if (color[w] < 0) {
          color[w] = 1 - color[queue[h]];
          queue.push_back(w);
        } else if (color[w] == color[queue[h]]) {
          return false;
        }
      }
  }
  return true;
}

bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique) {
  const int n = g.num_vertices();
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : clique) {
    if (!g.contains(v) || in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) {
      inside += in[w];
      if (!in[v] && !in[w]) return false;
    }
    if (in[v] && inside + 1 != clique.size()) return false;
  }
  return true;
}

bool is_chordal(const Graph &g) {
  const int n = g.num_vertices();
  std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  // Maximum cardinality search numbers vertices n down to 1; the resulting
  // numbering is a perfect elimination ordering iff the graph is chordal.
  for (int number = n; number >= 1; --number) {
    Vertex pick = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (!position[v] && (pick == 0 || weight[v] > weight[pick])) pick = v;
    position[pick] = number;
    for (Vertex w : g.neighbors(pick))
      if (!position[w]) ++weight[w];
  }
  for (Vertex v = 1; v <= n; ++v) {
    Vertex p = 0;
    for (Vertex w : g.neighbors(v))
      if (position[w] > position[v] && (p == 0 || position[w] < position[p])) p = w;
    if (!p) continue;
    for (Vertex w : g.neighbors(v))
      if (w != p && position[w] > position[v] && !g.adjacent(p, w)) return false;
  }
  return true;
}

} // namespace pairdom::reductions
