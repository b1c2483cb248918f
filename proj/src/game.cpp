#include "ncg/game.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "bit_bfs.hpp"

namespace ncg {

StrategyVector StrategyVector::create(int n, Rat alpha,
                                      std::vector<std::vector<int>> strategies) {
  if (n < 1) throw std::invalid_argument("need at least one player");
  if (static_cast<int>(strategies.size()) != n)
    throw std::invalid_argument("strategy count must equal n");
  for (int u = 0; u < n; ++u) {
    auto& set = strategies[u];
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw std::invalid_argument("duplicate endpoint in a strategy");
    for (int v : set) {
      if (v < 0 || v >= n) throw std::invalid_argument("endpoint out of range");
      if (v == u) throw std::invalid_argument("player cannot buy a link to itself");
    }
  }
  return StrategyVector{n, std::move(alpha), std::move(strategies)};
}

bool StrategyVector::buys(int u, int v) const {
  const auto& set = strategies[u];
  return std::binary_search(set.begin(), set.end(), v);
}

OwnedGraph::OwnedGraph(Graph graph, std::vector<std::vector<int>> bought)
    : graph_(std::move(graph)), bought_(std::move(bought)) {
  if (static_cast<int>(bought_.size()) != graph_.node_count())
    throw std::invalid_argument("ownership list size mismatch");
  std::vector<std::pair<int, int>> covered;
  for (int u = 0; u < graph_.node_count(); ++u) {
    std::sort(bought_[u].begin(), bought_[u].end());
    for (int v : bought_[u]) {
      if (!graph_.has_edge(u, v))
        throw std::invalid_argument("purchase of a non-edge");
      covered.push_back(std::minmax(u, v));
    }
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  if (static_cast<int>(covered.size()) != graph_.edge_count())
    throw std::invalid_argument("edge without an owner");
}

bool OwnedGraph::buys(int buyer, int other) const {
  const auto& set = bought_[buyer];
  return std::binary_search(set.begin(), set.end(), other);
}

OwnedGraph build_comm_graph(const StrategyVector& s) {
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < s.n; ++u)
    for (int v : s.strategies[u])
      if (u < v || !s.buys(v, u)) edge_list.push_back(std::minmax(u, v));
  return OwnedGraph(Graph(s.n, edge_list), s.strategies);
}

CostBreakdown player_cost(const StrategyVector& s, int u) {
  if (u < 0 || u >= s.n) throw std::invalid_argument("player out of range");
  OwnedGraph g = build_comm_graph(s);
  Cost link = Cost(s.alpha * static_cast<long long>(s.strategies[u].size()));
  auto dist = bfs_distances(g.graph(), u);
  long long sum = 0;
  bool all_reached = true;
  for (int d : dist) {
    if (d == kUnreached) all_reached = false;
    else sum += d;
  }
  Cost distance = all_reached ? Cost(sum) : Cost::infinity();
  return CostBreakdown{link, distance, link + distance};
}

Cost social_cost(const StrategyVector& s) {
  OwnedGraph g = build_comm_graph(s);
  long long links = 0;
  for (const auto& set : s.strategies) links += static_cast<long long>(set.size());
  Cost total = Cost(s.alpha * links);
  for (int u = 0; u < s.n; ++u) {
    auto dist = bfs_distances(g.graph(), u);
    for (int d : dist) {
      if (d == kUnreached) return Cost::infinity();
      total += Cost(d);
    }
  }
  return total;
}

namespace {

// For n <= 7: minimum ordered-pair distance total among connected graphs
// with exactly m edges, or -1 when none exists. Computed once per n.
const std::vector<long long>& min_distance_totals(int n) {
  static std::map<int, std::vector<long long>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  int max_m = n * (n - 1) / 2;
  std::vector<long long> best(max_m + 1, -1);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  uint32_t all = (1u << n) - 1;
  for (uint32_t mask = 0; mask < (1u << max_m); ++mask) {
    uint32_t adj[8] = {0};
    for (uint32_t bits = mask; bits;) {
      int e = std::countr_zero(bits);
      bits &= bits - 1;
      adj[pairs[e].first] |= 1u << pairs[e].second;
      adj[pairs[e].second] |= 1u << pairs[e].first;
    }
    long long total = 0;
    for (int u = 0; u < n; ++u) {
      long long from_u = detail::mask_bfs_sum(adj, all, u);
      if (from_u < 0) {
        total = -1;
        break;
      }
      total += from_u;
    }
    if (total < 0) continue;
    int m = std::popcount(mask);
    if (best[m] == -1 || total < best[m]) best[m] = total;
  }
  return cache.emplace(n, std::move(best)).first->second;
}

}  // namespace

OptimumResult optimum_cost(int n, const Rat& alpha) {
  if (n < 1) throw std::invalid_argument("need at least one player");
  if (alpha <= Rat(0)) throw std::invalid_argument("alpha must be positive");
  if (n == 1) return OptimumResult{Cost(Rat(0)), true};
  if (n <= 7) {
    const auto& best = min_distance_totals(n);
    bool found = false;
    Rat best_cost;
    for (int m = n - 1; m < static_cast<int>(best.size()); ++m) {
      if (best[m] == -1) continue;
      Rat cand = alpha * m + best[m];
      if (!found || cand < best_cost) {
        best_cost = cand;
        found = true;
      }
    }
    return OptimumResult{Cost(best_cost), true};
  }
  // Star vs clique upper bound.
  Rat star = alpha * (n - 1) + Rat(2) * (n - 1) * (n - 1);
  Rat clique = alpha * n * (n - 1) / 2 + Rat(n) * (n - 1);
  return OptimumResult{Cost(std::min(star, clique)), false};
}

Rat poa(const std::vector<StrategyVector>& equilibria, int n, const Rat& alpha) {
  if (equilibria.empty())
    throw std::invalid_argument("poa over an empty equilibrium list");
  Cost worst = Cost::neg_infinity();
  for (const auto& s : equilibria) {
    if (s.n != n || s.alpha != alpha)
      throw std::invalid_argument("equilibrium does not match n/alpha");
    Cost c = social_cost(s);
    if (worst < c) worst = c;
  }
  if (!worst.finite())
    throw std::invalid_argument("poa of a disconnected profile");
  OptimumResult opt = optimum_cost(n, alpha);
  return worst.value() / opt.cost.value();
}

}  // namespace ncg
