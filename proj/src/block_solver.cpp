#include "pairdom/block_solver.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "pairdom/errors.hpp"

namespace pairdom::block {

namespace {

/// Input id of a vertex of a renumbered graph; the identity when empty.
/// Every tie broken "by smallest id" goes through this, so results do not
/// depend on the internal numbering.
class IdMap {
public:
  IdMap() = default;
  explicit IdMap(std::vector<Vertex> input_id) : id_(std::move(input_id)) {}
  Vertex operator()(Vertex x) const { return id_.empty() ? x : id_[x]; }
  bool identity() const { return id_.empty(); }

private:
  std::vector<Vertex> id_;
};

/// Breadth-first renumbering from `root`, scanning neighbors in ascending
/// id order. Adjacent vertices get nearby numbers, which keeps the linear
/// passes below cache-friendly on large inputs.
struct Local {
  Graph graph;
  IdMap id;
  std::vector<Vertex> parent;  // breadth-first parent, 0 for the root
};

Local localize(const Graph &g, Vertex root) {
  const int n = g.num_vertices();
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<Vertex> local(size, 0), input(size, 0), parent(size, 0);
  int next = 1;
  local[root] = 1;
  input[1] = root;
  for (int head = 1; head <= next; ++head)
    for (Vertex w : g.neighbors(input[head]))
      if (!local[w]) {
        local[w] = ++next;
        input[next] = w;
        parent[next] = head;
      }
  if (next != n) throw InstanceError("graph is disconnected");
  return {g.relabeled(local), IdMap(std::move(input)), std::move(parent)};
}

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next;  // index into neighbors(v)
};

/// Blocks in discovery order, stored flat. Members of block b are
/// members[start[b] .. start[b + 1]) in ascending order; the blocks holding
/// vertex x are block_of[vstart[x] .. vstart[x + 1]).
struct FlatBlocks {
  std::vector<std::size_t> start{0};
  std::vector<Vertex> members;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> vstart;
  std::vector<int> block_of;

  std::size_t count() const { return edges.size(); }
  std::span<const Vertex> block(std::size_t b) const {
    return {members.data() + start[b], start[b + 1] - start[b]};
  }
  int blocks_at(Vertex x) const { return static_cast<int>(vstart[x + 1] - vstart[x]); }
  bool all_cliques() const {
    for (std::size_t b = 0; b < count(); ++b) {
      const std::size_t k = start[b + 1] - start[b];
      if (edges[b] != k * (k - 1) / 2) return false;
    }
    return true;
  }
  void sort_members(const IdMap &id) {
    if (id.identity()) return;
    for (std::size_t b = 0; b < count(); ++b)
      std::sort(members.begin() + static_cast<std::ptrdiff_t>(start[b]),
                members.begin() + static_cast<std::ptrdiff_t>(start[b + 1]),
                [&](Vertex x, Vertex y) { return id(x) < id(y); });
  }
  /// Lexicographic key; two blocks share at most one vertex, so the first
  /// two members decide the order.
  std::pair<Vertex, Vertex> key(std::size_t b, const IdMap &id) const {
    auto m = block(b);
    return {id(m[0]), m.size() > 1 ? id(m[1]) : 0};
  }
};

FlatBlocks decompose(const Graph &g) {
  const int n = g.num_vertices();
  if (n == 0) throw InstanceError("empty graph has no blocks");
  const auto size = static_cast<std::size_t>(n) + 1;
  FlatBlocks out;
  std::vector<Vertex> raw;  // members per block in discovery order
  if (n == 1) {
    raw.push_back(1);
    out.start.push_back(1);
    out.edges.push_back(0);
  } else {
    std::vector<int> disc(size, 0), low(size, 0), stamp(size, -1);
    std::vector<Edge> edge_stack;
    std::vector<Frame> stack;
    int timer = 0;

    auto close_block = [&](Vertex v, Vertex w) {
      const int id = static_cast<int>(out.edges.size());
      std::size_t edges = 0;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        ++edges;
        for (Vertex x : {e.first, e.second})
          if (stamp[x] != id) {
            stamp[x] = id;
            raw.push_back(x);
          }
        if (e == Edge{v, w}) break;
      }
      out.start.push_back(raw.size());
      out.edges.push_back(edges);
    };

    disc[1] = low[1] = ++timer;
    stack.push_back({1, 0, 0});
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (!disc[w]) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex w = f.v;
      const Vertex v = f.parent;
      stack.pop_back();
      if (v == 0) continue;
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) close_block(v, w);
    }
    if (timer != n) throw InstanceError("graph is disconnected");
  }

  // Counting sort by vertex id: builds the vertex -> blocks index and leaves
  // every block's members ascending without per-block sorting.
  const std::size_t t = out.count();
  out.vstart.assign(size + 1, 0);
  for (Vertex x : raw) ++out.vstart[x + 1];
  for (std::size_t x = 1; x < size; ++x) out.vstart[x + 1] += out.vstart[x];
  out.block_of.resize(raw.size());
  {
    std::vector<std::size_t> fill(out.vstart.begin(), out.vstart.end() - 1);
    for (std::size_t b = 0; b < t; ++b)
      for (std::size_t i = out.start[b]; i < out.start[b + 1]; ++i)
        out.block_of[fill[raw[i]]++] = static_cast<int>(b);
  }
  out.members.resize(raw.size());
  {
    std::vector<std::size_t> fill(out.start.begin(), out.start.end() - 1);
    for (Vertex x = 1; x <= n; ++x)
      for (std::size_t i = out.vstart[x]; i < out.vstart[x + 1]; ++i)
        out.members[fill[out.block_of[i]]++] = x;
  }
  return out;
}

/// Fills position and children (ascending by input id) once order and
/// father are set.
void complete_family(EliminationOrdering &ord, const IdMap &id) {
  const std::size_t n = ord.order.size();
  ord.position.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ord.position[ord.order[i]] = static_cast<int>(i) + 1;
  std::vector<int> child_count(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) ++child_count[ord.father[v]];
  ord.children.assign(n + 1, {});
  for (std::size_t v = 1; v <= n; ++v)
    if (child_count[v]) ord.children[v].reserve(static_cast<std::size_t>(child_count[v]));
  for (std::size_t v = 1; v <= n; ++v)
    if (ord.father[v]) ord.children[ord.father[v]].push_back(static_cast<Vertex>(v));
  if (!id.identity())
    for (auto &c : ord.children)
      if (c.size() > 1)
        std::sort(c.begin(), c.end(), [&](Vertex x, Vertex y) { return id(x) < id(y); });
}

EliminationOrdering block_ordering(const Graph &g, const IdMap &id) {
  const int n = g.num_vertices();
  FlatBlocks flat = decompose(g);
  if (!flat.all_cliques()) throw InstanceError("not a connected block graph");
  flat.sort_members(id);
  const int t = static_cast<int>(flat.count());
  const auto size = static_cast<std::size_t>(n) + 1;

  std::vector<char> was_cut(size, 0);
  for (Vertex x = 1; x <= n; ++x) was_cut[x] = flat.blocks_at(x) >= 2;

  // Root the block-cut tree at the lexicographically last block and peel in
  // reverse breadth-first order, so every block goes after the blocks that
  // hang below it. Blocks at a cut vertex are queued in descending id order,
  // which makes siblings come out ascending.
  int root = 0;
  for (int b = 1; b < t; ++b)
    if (flat.key(b, id) > flat.key(root, id)) root = b;
  std::vector<int> queue{root};
  queue.reserve(static_cast<std::size_t>(t));
  std::vector<Vertex> attach_of(static_cast<std::size_t>(t), 0);
  std::vector<int> hanging;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int c = queue[head];
    for (Vertex x : flat.block(c)) {
      if (x == attach_of[c] || !was_cut[x]) continue;
      hanging.clear();
      for (std::size_t i = flat.vstart[x]; i < flat.vstart[x + 1]; ++i)
        if (flat.block_of[i] != c) hanging.push_back(flat.block_of[i]);
      std::sort(hanging.begin(), hanging.end(),
                [&](int a, int b) { return flat.key(a, id) > flat.key(b, id); });
      for (int b : hanging) {
        attach_of[b] = x;
        queue.push_back(b);
      }
    }
  }
  if (static_cast<int>(queue.size()) != t) throw std::logic_error("block-cut tree is not a tree");

  EliminationOrdering ord;
  ord.order.reserve(size - 1);
  ord.group.assign(size, -1);
  ord.father.assign(size, 0);

  // Former cut vertices carry subtrees and are swept before their leaf
  // siblings. In the final block the largest former cut vertex is held back
  // to become v_n. A peeled block's only later vertex outside the block is
  // its attaching cut vertex, which is therefore the father of every member.
  auto emit = [&](int b, Vertex skip, Vertex hold) {
    for (int pass = 1; pass >= 0; --pass)
      for (Vertex x : flat.block(b))
        if (x != skip && x != hold && was_cut[x] == pass) {
          ord.order.push_back(x);
          ord.group[x] = b;
          ord.father[x] = skip;
        }
    if (hold) {
      ord.order.push_back(hold);
      ord.group[hold] = b;
    }
  };

  for (std::size_t k = queue.size(); k-- > 1;) emit(queue[k], attach_of[queue[k]], 0);
  Vertex hold = 0;
  for (Vertex x : flat.block(root))
    if (was_cut[x]) hold = x;
  emit(root, 0, hold);
  const Vertex last = ord.order.back();
  for (Vertex x : flat.block(root)) ord.father[x] = x == last ? 0 : last;

  complete_family(ord, id);
  return ord;
}

/// Reverse breadth-first order of a tree renumbered from its root: the
/// local ids n..1, where the only later neighbor of a vertex is its parent.
EliminationOrdering local_tree_ordering(const Local &loc) {
  const int n = loc.graph.num_vertices();
  EliminationOrdering ord;
  ord.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ord.order[i] = n - i;
  ord.father = loc.parent;
  ord.group.resize(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v <= n; ++v) ord.group[v] = v;
  complete_family(ord, loc.id);
  return ord;
}

EliminationOrdering to_input(const EliminationOrdering &o, const IdMap &id) {
  if (id.identity()) return o;
  const std::size_t n = o.order.size();
  EliminationOrdering out;
  out.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.order[i] = id(o.order[i]);
  out.position.assign(n + 1, 0);
  out.father.assign(n + 1, 0);
  out.group.assign(n + 1, -1);
  out.children.assign(n + 1, {});
  for (Vertex x = 1; x <= static_cast<Vertex>(n); ++x) {
    const Vertex v = id(x);
    out.position[v] = o.position[x];
    out.father[v] = o.father[x] ? id(o.father[x]) : 0;
    out.group[v] = o.group[x];
    auto &c = out.children[v];
    c.reserve(o.children[x].size());
    for (Vertex y : o.children[x]) c.push_back(id(y));
  }
  return out;
}

void require_solvable(const Graph &g) {
  if (g.num_vertices() < 2) throw InstanceError("need at least two vertices");
}

void require_tree_shape(const Graph &g) {
  require_solvable(g);
  if (g.num_edges() != static_cast<std::size_t>(g.num_vertices() - 1))
    throw InstanceError("not a tree");
}

} // namespace

BlockDecomposition block_cut_decomposition(const Graph &g) {
  const FlatBlocks flat = decompose(g);
  const std::size_t t = flat.count();
  const IdMap id;
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return flat.key(a, id) < flat.key(b, id); });
  BlockDecomposition out;
  out.blocks.reserve(t);
  out.block_edges.reserve(t);
  for (std::size_t b : idx) {
    auto m = flat.block(b);
    out.blocks.emplace_back(m.begin(), m.end());
    out.block_edges.push_back(flat.edges[b]);
  }
  for (Vertex x = 1; x <= g.num_vertices(); ++x)
    if (flat.blocks_at(x) >= 2) out.cut_vertices.push_back(x);
  return out;
}

bool is_block_graph(const Graph &g) {
  if (g.num_vertices() == 0 || !g.is_connected()) return false;
  return decompose(g).all_cliques();
}

bool is_tree(const Graph &g) {
  return g.num_vertices() >= 1 &&
         g.num_edges() == static_cast<std::size_t>(g.num_vertices() - 1) &&
         g.is_connected();
}

EliminationOrdering block_elimination_ordering(const Graph &g) {
  require_solvable(g);
  const Local loc = localize(g, 1);
  return to_input(block_ordering(loc.graph, loc.id), loc.id);
}

EliminationOrdering tree_ordering(const Graph &g) {
  require_tree_shape(g);
  const Local loc = localize(g, g.num_vertices());
  return to_input(local_tree_ordering(loc), loc.id);
}

bool has_closure_property(const Graph &g, const EliminationOrdering &ord) {
  const int n = g.num_vertices();
  if (static_cast<int>(ord.order.size()) != n ||
      ord.position.size() != static_cast<std::size_t>(n) + 1)
    return false;
  // Rose-Tarjan-Lueker: it suffices that the later neighbors of v, other than
  // the earliest one p, are all adjacent to p.
  for (Vertex v = 1; v <= n; ++v) {
    Vertex p = 0;
    for (Vertex w : g.neighbors(v))
      if (ord.position[w] > ord.position[v] &&
          (p == 0 || ord.position[w] < ord.position[p]))
        p = w;
    if (!p) continue;
    for (Vertex w : g.neighbors(v))
      if (w != p && ord.position[w] > ord.position[v] && !g.adjacent(p, w))
        return false;
  }
  return true;
}

namespace {

class LabelSweep {
public:
  LabelSweep(const Graph &g, const EliminationOrdering &ord, bool match_cliques,
             const IdMap &id)
      : g_(g), ord_(ord), match_cliques_(match_cliques), id_(id) {
    const auto size = static_cast<std::size_t>(g.num_vertices()) + 1;
    labels_.dominated.assign(size, 0);
    labels_.level.assign(size, 0);
    labels_.partner.assign(size, std::nullopt);
  }

  VertexLabels run() {
    auto &D = labels_.dominated;
    auto &L = labels_.level;
    const std::size_t n = ord_.order.size();
    std::vector<Vertex> marked;
    for (std::size_t i = 1; i <= n; ++i) {
      const Vertex v = ord_.order[i - 1];
      if (!D[v] && i != n) {
        const Vertex f = ord_.father[v];
        L[f] = 1;
        dominate_closed(f);
      }
      if (!D[v]) continue;

      marked.clear();
      for (Vertex c : ord_.children[v])
        if (L[c] == 1) marked.push_back(c);
      if (marked.empty()) continue;
      for (Vertex c : marked) L[c] = 2;

      auto unmatched = match_cliques_ ? pair_within_cliques(marked) : marked;
      if (unmatched.empty()) continue;

      L[v] = 2;
      dominate_closed(v);
      pair(unmatched.front(), v);
      for (std::size_t k = 1; k < unmatched.size(); ++k) {
        const Vertex u = unmatched[k];
        const Vertex spare = first_unlabelled_child(u);
        L[spare] = 2;
        pair(u, spare);
      }
    }

    const Vertex root = ord_.last();
    if (!D[root] || L[root] == 1) {
      L[root] = 2;
      const Vertex w = first_unlabelled_child(root);
      L[w] = 2;
      pair(root, w);
      D[root] = 1;
    }
    check_end_state();
    return std::move(labels_);
  }

private:
  void dominate_closed(Vertex v) {
    labels_.dominated[v] = 1;
    for (Vertex w : g_.neighbors(v)) labels_.dominated[w] = 1;
  }

  void pair(Vertex a, Vertex b) {
    labels_.partner[a] = b;
    labels_.partner[b] = a;
  }

  /// Children marked 1 form cliques by group; pair each clique off in
  /// ascending id order and return the leftovers (the largest id of each odd
  /// clique), ascending.
  std::vector<Vertex> pair_within_cliques(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
      return std::pair(ord_.group[a], id_(a)) < std::pair(ord_.group[b], id_(b));
    });
    std::vector<Vertex> left;
    for (std::size_t i = 0; i < members.size();) {
      std::size_t j = i;
      while (j < members.size() && ord_.group[members[j]] == ord_.group[members[i]]) ++j;
      for (std::size_t k = i; k + 1 < j; k += 2) pair(members[k], members[k + 1]);
      if ((j - i) % 2 != 0) left.push_back(members[j - 1]);
      i = j;
    }
    std::sort(left.begin(), left.end(), [&](Vertex a, Vertex b) { return id_(a) < id_(b); });
    return left;
  }

  /// A vertex marked 1 always has a child that was left at 0: the child whose
  /// being undominated put it in the set.
  Vertex first_unlabelled_child(Vertex v) const {
    for (Vertex c : ord_.children[v])
      if (labels_.level[c] == 0) return c;
    throw std::logic_error("no unlabelled child under vertex " + std::to_string(id_(v)));
  }

  void check_end_state() const {
    for (Vertex v = 1; v <= g_.num_vertices(); ++v) {
      const auto &p = labels_.partner[v];
      const bool paired = labels_.level[v] == 2;
      if (paired != p.has_value() || !labels_.dominated[v] ||
          (p && (labels_.partner[*p] != v || !g_.adjacent(v, *p))))
        throw std::logic_error("label invariant broken at vertex " + std::to_string(id_(v)));
    }
  }

  const Graph &g_;
  const EliminationOrdering &ord_;
  bool match_cliques_;
  const IdMap &id_;
  VertexLabels labels_;
};

PairedSolution collect_pairs(const VertexLabels &labels, const IdMap &id) {
  std::vector<Edge> pairs;
  for (std::size_t v = 1; v < labels.partner.size(); ++v)
    if (labels.partner[v] && static_cast<Vertex>(v) < *labels.partner[v])
      pairs.emplace_back(id(static_cast<Vertex>(v)), id(*labels.partner[v]));
  return PairedSolution::from_pairs(std::move(pairs));
}

VertexLabels to_input(VertexLabels l, const IdMap &id) {
  if (id.identity()) return l;
  VertexLabels out;
  const std::size_t size = l.level.size();
  out.dominated.assign(size, 0);
  out.level.assign(size, 0);
  out.partner.assign(size, std::nullopt);
  for (Vertex x = 1; x < static_cast<Vertex>(size); ++x) {
    const Vertex v = id(x);
    out.dominated[v] = l.dominated[x];
    out.level[v] = l.level[x];
    if (l.partner[x]) out.partner[v] = id(*l.partner[x]);
  }
  return out;
}

/// Runs the sweep on a renumbered graph; labels and ordering are translated
/// back to input ids only when asked for.
LabelingResult solve_local(const Local &loc, const EliminationOrdering &ord, bool match_cliques,
                           bool with_labels) {
  LabelingResult out;
  VertexLabels labels = LabelSweep(loc.graph, ord, match_cliques, loc.id).run();
  out.solution = collect_pairs(labels, loc.id);
  if (with_labels) {
    out.labels = to_input(std::move(labels), loc.id);
    out.ordering = to_input(ord, loc.id);
  }
  return out;
}

LabelingResult solve_block(const Graph &g, bool with_labels) {
  require_solvable(g);
  const Local loc = localize(g, 1);
  return solve_local(loc, block_ordering(loc.graph, loc.id), true, with_labels);
}

LabelingResult solve_tree(const Graph &g, bool with_labels) {
  require_tree_shape(g);
  const Local loc = localize(g, g.num_vertices());
  return solve_local(loc, local_tree_ordering(loc), false, with_labels);
}

} // namespace

LabelingResult mpdb_labeled(const Graph &g, EliminationOrdering ord) {
  if (static_cast<int>(ord.order.size()) != g.num_vertices() || g.num_vertices() < 2)
    throw ArgumentError("ordering does not cover the graph");
  const IdMap id;
  LabelingResult out;
  out.labels = LabelSweep(g, ord, true, id).run();
  out.solution = collect_pairs(out.labels, id);
  out.ordering = std::move(ord);
  return out;
}

LabelingResult mpdb_labeled(const Graph &g) { return solve_block(g, true); }

PairedSolution mpdb(const Graph &g) { return solve_block(g, false).solution; }

LabelingResult mpdt_labeled(const Graph &g) { return solve_tree(g, true); }

PairedSolution mpdt(const Graph &g) { return solve_tree(g, false).solution; }

} // namespace pairdom::block
