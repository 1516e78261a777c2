#include "pairdom/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "pairdom/errors.hpp"
#include "pairdom/io.hpp"

namespace pairdom::gen {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % range);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

const char *to_string(Kind k) {
  switch (k) {
  case Kind::tree: return "tree";
  case Kind::block: return "block";
  case Kind::interval: return "interval";
  case Kind::vc_source: return "vc-source";
  }
  return "?";
}

Kind kind_from_string(const std::string &name) {
  for (Kind k : {Kind::tree, Kind::block, Kind::interval, Kind::vc_source})
    if (name == to_string(k)) return k;
  throw ArgumentError("unknown generator kind '" + name + "'");
}

namespace {

Graph relabelled(int n, std::vector<Edge> edges, Rng &rng) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 1);
  rng.shuffle(label);
  for (auto &[u, v] : edges) {
    u = label[u - 1];
    v = label[v - 1];
  }
  return Graph::from_edges(n, edges);
}

} // namespace

Graph random_tree(int n, Rng &rng) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 2; v <= n; ++v)
    edges.emplace_back(static_cast<Vertex>(rng.uniform(1, v - 1)), v);
  return relabelled(n, std::move(edges), rng);
}

Graph random_block_graph(int n, int max_clique, Rng &rng) {
  std::vector<Edge> edges;
  int count = static_cast<int>(rng.uniform(2, std::min(max_clique, n)));
  for (Vertex u = 1; u <= count; ++u)
    for (Vertex v = u + 1; v <= count; ++v) edges.emplace_back(u, v);
  std::vector<Vertex> members;
  while (count < n) {
    const auto cut = static_cast<Vertex>(rng.uniform(1, count));
    const int size = static_cast<int>(rng.uniform(2, std::min(max_clique, n - count + 1)));
    members.assign(1, cut);
    for (int k = 1; k < size; ++k) members.push_back(++count);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        edges.emplace_back(members[i], members[j]);
  }
  return relabelled(n, std::move(edges), rng);
}

interval::IntervalRep random_intervals(int n, std::int64_t max_length, Rng &rng) {
  interval::IntervalRep rep;
  rep.intervals.reserve(static_cast<std::size_t>(n));
  std::int64_t reach = 0;
  for (int i = 0; i < n; ++i) {
    // The union so far covers [0, reach] without gaps, so any left endpoint
    // in that range meets an earlier interval.
    const std::int64_t left =
        i == 0 ? 0 : rng.uniform(std::max<std::int64_t>(0, reach - max_length), reach);
    const std::int64_t right = left + rng.uniform(0, max_length);
    reach = std::max(reach, right);
    rep.intervals.push_back({0, left, right});
  }
  rng.shuffle(rep.intervals);
  for (int i = 0; i < n; ++i) rep.intervals[i].id = i + 1;
  return rep;
}

Graph random_connected_graph(int n, int extra_edge_percent, Rng &rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n) + 1,
                                         std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (Vertex v = 2; v <= n; ++v) {
    const auto u = static_cast<Vertex>(rng.uniform(1, v - 1));
    edges.emplace_back(u, v);
    present[u][v] = 1;
  }
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!present[u][v] && rng.chance(static_cast<std::uint64_t>(extra_edge_percent), 100))
        edges.emplace_back(u, v);
  return relabelled(n, std::move(edges), rng);
}

namespace {

void check_spec(const GeneratorSpec &spec) {
  if (spec.n < 2) throw ArgumentError("generator needs n >= 2");
  if (spec.max_clique < 2) throw ArgumentError("max clique size must be at least 2");
  if (spec.max_length < 0) throw ArgumentError("max interval length must be non-negative");
  if (spec.extra_edge_percent < 0 || spec.extra_edge_percent > 100)
    throw ArgumentError("extra edge percentage must lie in 0..100");
  if (spec.kind == Kind::vc_source && spec.n > 5000)
    throw ArgumentError("vc-source instances are limited to 5000 vertices");
}

} // namespace

Graph generate_graph(const GeneratorSpec &spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  switch (spec.kind) {
  case Kind::tree: return random_tree(spec.n, rng);
  case Kind::block: return random_block_graph(spec.n, spec.max_clique, rng);
  case Kind::vc_source: return random_connected_graph(spec.n, spec.extra_edge_percent, rng);
  case Kind::interval: break;
  }
  throw ArgumentError("interval instances are interval families, use generate_intervals");
}

interval::IntervalRep generate_intervals(const GeneratorSpec &spec) {
  check_spec(spec);
  if (spec.kind != Kind::interval) throw ArgumentError("not an interval spec");
  Rng rng(spec.seed);
  return random_intervals(spec.n, spec.max_length > 0 ? spec.max_length : 10, rng);
}

std::string generate_text(const GeneratorSpec &spec) {
  if (spec.kind == Kind::interval) return interval::serialize_intervals(generate_intervals(spec));
  return serialize_graph(generate_graph(spec));
}

} // namespace pairdom::gen
