#pragma once

#include <optional>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"
#include "ncg/rational.hpp"
#include "ncg/verdict.hpp"

namespace ncg {

/// Per-source distance level sizes: sizes[u][d] = |{w : d(u,w) = d}|.
/// Row u has ecc(u)+1 entries and sums to n (connected graphs only).
struct LevelProfile {
  int n = 0;
  std::vector<std::vector<long long>> sizes;

  /// Nodes of level [lo, hi] from u, clamped to the existing levels.
  long long window_sum(int u, int lo, int hi) const;
};

LevelProfile level_sets(const Graph& g);

struct DauResult {
  bool ok = false;
  /// Shared-r mode: the smallest witness r when ok. Per-source mode: unused.
  int r = -1;
  /// Per-source mode: each source's smallest witness r (-1 if none).
  std::vector<int> per_source_r;
};

/// (k, eps)-distance-almost-uniform: one shared r such that from every
/// source, levels r..r+k-1 hold at least n(1-eps) nodes. `per_source_r`
/// switches to the weaker variant where each source picks its own r.
DauResult is_dau(const Graph& g, int k, const Rat& eps,
                 bool per_source_r = false);

/// NE at alpha < n/C (C > 4) must be (5, eps)-DAU for eps = 4/5*(1+1/C).
/// Not applicable when alpha is out of range. On failure the notes also
/// report whether the weaker pairwise window bound (5 levels centered on
/// d(u,v) from every other source exceeding n-4*alpha) holds anywhere.
CheckResult check_ne_dau(const StrategyVector& s, const Rat& c);

/// Fourth-power collapse: diam(g^4) == ceil(diam(g)/4), and for eps on the
/// grid 1/10..9/10, g being (5,eps)-DAU implies g^4 is (2,eps)-DAU.
CheckResult check_power_collapse(const Graph& g);

/// |M1(u,w)| = #{z : |d(z,u) - d(z,w)| <= 1}.
long long agreement_set(const Graph& g, int u, int w);

}  // namespace ncg
