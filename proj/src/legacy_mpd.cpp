#include "pairdom/legacy_mpd.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pairdom::interval {

IntervalRep counterexample_cex6() {
  return {{{1, 0, 3}, {2, 1, 4}, {3, 2, 6}, {4, 7, 9}, {5, 5, 10}, {6, 8, 11}}};
}

LegacyMpdResult legacy_mpd(const IntervalRep &rep) {
  const int n = rep.size();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    const auto &a = rep.intervals[x];
    const auto &b = rep.intervals[y];
    return std::tie(a.right, a.left, a.id) < std::tie(b.right, b.left, b.id);
  });

  // 1-based arrays over the augmented family; slot 0 stands for b_0 = 0.
  const int total = n + 2;
  std::vector<Coord> a(static_cast<std::size_t>(total) + 1, 0);
  std::vector<Coord> b(static_cast<std::size_t>(total) + 1, 0);
  std::vector<Vertex> source(static_cast<std::size_t>(total) + 1, 0);
  Coord reach = 2 * static_cast<Coord>(n);
  for (int p = 1; p <= n; ++p) {
    const auto &iv = rep.intervals[idx[p - 1]];
    a[p] = iv.left;
    b[p] = iv.right;
    source[p] = iv.id;
    reach = std::max(reach, iv.right);
  }
  // Sentinels n+1, n+2 sit past everything; with endpoints in 1..2n this is
  // a = 2n+1, 2n+2 and b = 2n+3, 2n+4.
  a[n + 1] = reach + 1;
  a[n + 2] = reach + 2;
  b[n + 1] = reach + 3;
  b[n + 2] = reach + 4;

  auto max_left_before = [&](Coord e) {
    Coord best = 0;
    bool any = false;
    for (int t = 1; t <= total; ++t)
      if (b[t] < e) {
        best = any ? std::max(best, a[t]) : a[t];
        any = true;
      }
    return any ? best : Coord{0};
  };

  LegacyMpdResult out;
  std::vector<int> l(static_cast<std::size_t>(total) + 1, 0);
  for (int j = 1; j <= total; ++j) {
    int pick = 0;
    for (int t = 1; t <= total; ++t) {
      if (t == j || a[t] > b[j] || a[j] > b[t]) continue;
      if (pick == 0 || a[t] < a[pick]) pick = t;
    }
    l[j] = pick ? pick : j;
  }

  std::vector<std::vector<Coord>> left_set(static_cast<std::size_t>(total) + 1);
  for (int i = 1; i <= n; ++i) {
    for (int t = 1; t <= total; ++t)
      if (b[i - 1] < a[t] && a[t] < b[i]) left_set[i].push_back(a[t]);
    std::sort(left_set[i].begin(), left_set[i].end());
    left_set[i].erase(std::unique(left_set[i].begin(), left_set[i].end()), left_set[i].end());
  }

  for (int i = 1; i <= total; ++i)
    out.table.push_back({i, a[i], b[i], max_left_before(a[i]), l[i], left_set[i], source[i]});

  std::vector<std::vector<int>> mpd(static_cast<std::size_t>(total) + 1);
  for (int j = 1; j <= total; ++j) {
    const Coord probe = max_left_before(std::min(a[j], a[l[j]]));
    int k = 0;
    for (int i = 1; i <= n && k == 0; ++i)
      if (std::binary_search(left_set[i].begin(), left_set[i].end(), probe)) k = i;
    if (k >= j) throw std::logic_error("legacy MPD referenced MPD(" + std::to_string(k) +
                                       ") before computing it");
    std::vector<int> set{std::min(l[j], j)};
    if (l[j] != j) set.push_back(std::max(l[j], j));
    for (int x : mpd[k])
      if (std::find(set.begin(), set.end(), x) == set.end()) set.push_back(x);
    mpd[j] = set;
    out.steps.push_back({j, probe, k, std::move(set)});
  }

  for (int x : mpd[total])
    if (x <= n) out.result.push_back(source[x]);
  return out;
}

} // namespace pairdom::interval
