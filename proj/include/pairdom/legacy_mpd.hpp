#pragma once

#include <vector>

#include "pairdom/interval_solver.hpp"

namespace pairdom::interval {

/// One row of the parameter table, in right-endpoint numbering
/// (1..n+2, the last two being the sentinels appended past every interval).
struct LegacyRow {
  int index;
  Coord left;
  Coord right;
  Coord max_left_before;         // max a(IFB(a_i)), 0 when nothing ends before
  int overlap_min_left;          // l_i
  std::vector<Coord> left_set;   // A_i, empty for the sentinels
  Vertex source_id;              // input id, 0 for sentinels
};

/// One iteration of the main loop: x = max a(IFB(min(a_j, a_{l_j}))), the
/// resolved set index k, and the accumulated set MPD(j).
struct LegacyStep {
  int j;
  Coord probe;
  int k;
  std::vector<int> set;
};

struct LegacyMpdResult {
  std::vector<LegacyRow> table;
  std::vector<LegacyStep> steps;
  /// MPD(n+2) without the sentinels, as input ids in accumulation order.
  std::vector<Vertex> result;
};

/// Right-endpoint dynamic program for paired domination on interval graphs,
/// reproduced step for step. It is known not to return minimum sets (CEX6
/// yields four vertices where two suffice); it exists for comparison.
LegacyMpdResult legacy_mpd(const IntervalRep &rep);

/// The six-interval instance on which the legacy program is suboptimal.
IntervalRep counterexample_cex6();

} // namespace pairdom::interval
