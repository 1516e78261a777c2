#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pairdom/graph.hpp"
#include "pairdom/interval_solver.hpp"

namespace pairdom::gen {

/// std::mt19937_64 with integer-only bounded draws. The engine's output is
/// fixed by the standard but the std distributions are not, so bounded draws
/// and shuffles are done here to keep a seed's stream identical everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

  template <typename T> void shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

enum class Kind { tree, block, interval, vc_source };

const char *to_string(Kind k);
/// Throws ArgumentError on an unknown name.
Kind kind_from_string(const std::string &name);

struct GeneratorSpec {
  Kind kind = Kind::tree;
  int n = 2;
  std::uint64_t seed = 0;
  int max_clique = 4;        // block
  std::int64_t max_length = 0;  // interval; 0 means the default of 10
  int extra_edge_percent = 30;  // vc-source
};

/// Random attachment tree with shuffled labels.
Graph random_tree(int n, Rng &rng);
/// Random tree of cliques: each new clique (2..max_clique vertices) shares a
/// single existing vertex with the graph built so far.
Graph random_block_graph(int n, int max_clique, Rng &rng);
/// Connected interval family: each left endpoint is drawn at or before the
/// current rightmost reach, so every interval meets an earlier one.
interval::IntervalRep random_intervals(int n, std::int64_t max_length, Rng &rng);
/// Random spanning tree plus each remaining pair with the given probability.
Graph random_connected_graph(int n, int extra_edge_percent, Rng &rng);

/// Throws ArgumentError if n < 2 or a knob is out of range.
Graph generate_graph(const GeneratorSpec &spec);
interval::IntervalRep generate_intervals(const GeneratorSpec &spec);

/// Text for the spec's kind: interval format for `interval`, edge list
/// otherwise.
std::string generate_text(const GeneratorSpec &spec);

} // namespace pairdom::gen
