#pragma once

#include <vector>

#include "ncg/graph.hpp"
#include "ncg/rational.hpp"

namespace ncg {

/// One play of the network creation game: n players, a link price, and each
/// player's set of purchased endpoints.
struct StrategyVector {
  int n = 0;
  Rat alpha{0};
  std::vector<std::vector<int>> strategies;  // sorted, no self-buys

  /// Validates ranges, sorts, and rejects self-buys / duplicate buys.
  static StrategyVector create(int n, Rat alpha,
                               std::vector<std::vector<int>> strategies);
  bool buys(int u, int v) const;
};

/// The undirected communication graph together with who bought what. An edge
/// exists iff at least one endpoint bought it; both may have.
class OwnedGraph {
 public:
  OwnedGraph(Graph graph, std::vector<std::vector<int>> bought);

  const Graph& graph() const { return graph_; }
  bool buys(int buyer, int other) const;
  bool double_bought(int u, int v) const { return buys(u, v) && buys(v, u); }
  /// Number of incident edges v bought / received, counting a double-bought
  /// edge on both sides.
  int bought_degree(int v) const { return static_cast<int>(bought_[v].size()); }
  const std::vector<int>& bought(int v) const { return bought_[v]; }

 private:
  Graph graph_;
  std::vector<std::vector<int>> bought_;
};

OwnedGraph build_comm_graph(const StrategyVector& s);

struct CostBreakdown {
  Cost link_cost;
  Cost distance_cost;
  Cost total;
};

/// c_u = alpha * |s_u| + sum_v dist(u, v); infinite when u cannot reach
/// someone.
CostBreakdown player_cost(const StrategyVector& s, int u);

Cost social_cost(const StrategyVector& s);

struct OptimumResult {
  Cost cost;
  /// True when the value is exact (exhaustive over graphs); false when it is
  /// the best of the star/clique candidates only, an upper bound.
  bool certified;
};

/// Social optimum over all connected hosts. Exhaustive for n <= 7 via
/// canonical graph classes; above that, best of star and clique.
OptimumResult optimum_cost(int n, const Rat& alpha);

/// max social cost over `equilibria` divided by the optimum. Throws
/// std::invalid_argument on an empty list or an uncertified optimum.
Rat poa(const std::vector<StrategyVector>& equilibria, int n, const Rat& alpha);

}  // namespace ncg
