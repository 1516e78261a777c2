#include "pairdom/graph.hpp"

#include <algorithm>
#include <string>

#include "pairdom/errors.hpp"

namespace pairdom {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw ArgumentError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") has an id outside 1.." + std::to_string(n));
    if (u == v) throw ArgumentError("self-loop at " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) g.offsets_[v] = g.offsets_[v - 1] + deg[v];
  g.adj_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.adj_[fill[u - 1]++] = v;
    g.adj_[fill[v - 1]++] = u;
  }
  for (int v = 1; v <= n; ++v) {
    auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v - 1]);
    auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw ArgumentError("duplicate edge (" + std::to_string(v) + "," +
                          std::to_string(*dup) + ")");
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
  Vertex other = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::has_isolated_vertex() const {
  for (Vertex v = 1; v <= n_; ++v)
    if (degree(v) == 0) return true;
  return false;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (!contains(v) || local[v])
      throw ArgumentError("induced: invalid or repeated vertex " + std::to_string(v));
    local[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> sub;
  for (Vertex v : vertices)
    for (Vertex w : neighbors(v))
      if (local[w] && local[v] < local[w]) sub.emplace_back(local[v], local[w]);
  return from_edges(static_cast<int>(vertices.size()), sub);
}

Graph Graph::relabeled(std::span<const Vertex> new_id) const {
  if (new_id.size() != static_cast<std::size_t>(n_) + 1)
    throw ArgumentError("relabeling must name every vertex");
  std::vector<Vertex> old_id(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v = 1; v <= n_; ++v) {
    const Vertex w = new_id[v];
    if (w < 1 || w > n_ || old_id[w] != 0) throw ArgumentError("relabeling is not a permutation");
    old_id[w] = v;
  }
  Graph h;
  h.n_ = n_;
  h.m_ = m_;
  h.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex w = 1; w <= n_; ++w) h.offsets_[w] = h.offsets_[w - 1] + degree(old_id[w]);
  h.adj_.resize(adj_.size());
  for (Vertex w = 1; w <= n_; ++w) {
    auto out = h.adj_.begin() + static_cast<std::ptrdiff_t>(h.offsets_[w - 1]);
    auto first = out;
    for (Vertex x : neighbors(old_id[w])) *out++ = new_id[x];
    std::sort(first, out);
  }
  return h;
}

PairedSolution PairedSolution::from_pairs(std::vector<Edge> pairs) {
  PairedSolution sol;
  for (auto &[u, v] : pairs)
    if (u > v) std::swap(u, v);
  std::sort(pairs.begin(), pairs.end());
  for (auto [u, v] : pairs) {
    sol.vertices.push_back(u);
    sol.vertices.push_back(v);
  }
  std::sort(sol.vertices.begin(), sol.vertices.end());
  sol.pairs = std::move(pairs);
  return sol;
}

const char *to_string(VerifyReason reason) {
  switch (reason) {
  case VerifyReason::ok: return "ok";
  case VerifyReason::not_dominating: return "not-dominating";
  case VerifyReason::not_partition: return "not-partition";
  case VerifyReason::non_edge_pair: return "non-edge-pair";
  }
  return "unknown";
}

bool is_dominating(const Graph &g, std::span<const Vertex> s) {
  const int n = g.num_vertices();
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : s) {
    if (!g.contains(v))
      throw ArgumentError("vertex " + std::to_string(v) + " outside 1.." +
                          std::to_string(n));
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](char c) { return c != 0; });
}

VerifyResult verify_paired_dominating(const Graph &g, const PairedSolution &sol) {
  const int n = g.num_vertices();
  std::vector<int> in_set(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : sol.vertices) {
    if (!g.contains(v) || in_set[v]) return {false, VerifyReason::not_partition};
    in_set[v] = 1;
  }
  std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : sol.pairs) {
    if (!g.contains(u) || !g.contains(v) || !in_set[u] || !in_set[v] || used[u] ||
        used[v] || u == v)
      return {false, VerifyReason::not_partition};
    used[u] = used[v] = 1;
  }
  if (sol.pairs.size() * 2 != sol.vertices.size())
    return {false, VerifyReason::not_partition};
  for (auto [u, v] : sol.pairs)
    if (!g.adjacent(u, v)) return {false, VerifyReason::non_edge_pair};
  if (!is_dominating(g, sol.vertices)) return {false, VerifyReason::not_dominating};
  return {true, VerifyReason::ok};
}

} // namespace pairdom
