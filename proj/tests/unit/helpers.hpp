#pragma once

// Shared builders and small independent oracles for the unit tests. The
// oracles deliberately reimplement things with the dumbest possible code so
// that agreement with the library is meaningful.

#include <algorithm>
#include <deque>
#include <random>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace testutil {

inline ncg::StrategyVector profile(
    int n, const ncg::Rat& alpha,
    const std::vector<std::pair<int, int>>& buys) {
  std::vector<std::vector<int>> strategies(n);
  for (auto [u, v] : buys) strategies[u].push_back(v);
  return ncg::StrategyVector::create(n, alpha, std::move(strategies));
}

// u buys the edge to u+1.
inline ncg::StrategyVector path_profile(int n, const ncg::Rat& alpha) {
  std::vector<std::pair<int, int>> buys;
  for (int u = 0; u + 1 < n; ++u) buys.emplace_back(u, u + 1);
  return profile(n, alpha, buys);
}

// u buys the edge to (u+1) mod n.
inline ncg::StrategyVector cycle_profile(int n, const ncg::Rat& alpha) {
  std::vector<std::pair<int, int>> buys;
  for (int u = 0; u < n; ++u) buys.emplace_back(u, (u + 1) % n);
  return profile(n, alpha, buys);
}

inline ncg::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return ncg::Graph(n, e);
}

inline ncg::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return ncg::Graph(n, e);
}

// Plain adjacency-list BFS, written from scratch; -1 for unreachable.
inline std::vector<int> oracle_bfs(const std::vector<std::vector<int>>& adj,
                                   int source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline std::vector<std::vector<int>> adjacency(const ncg::Graph& g) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Exact girth: BFS from every root; a cross edge at equal depth closes an
// odd cycle 2d+1, one level apart an even cycle 2d+2. The minimum over all
// roots is the girth.
inline int oracle_girth(const ncg::Graph& g) {  // -1 when acyclic
  auto adj = adjacency(g);
  int best = -1;
  for (int r = 0; r < g.node_count(); ++r) {
    std::vector<int> dist(g.node_count(), -1), par(g.node_count(), -1);
    std::deque<int> q{r};
    dist[r] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        if (v == par[u]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          q.push_back(v);
        } else {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// Multi-edges between the same pair would confuse par[] above; the library
// graphs are simple so this is fine.

// Brute-force social optimum over every graph on n nodes.
inline ncg::Rat oracle_optimum(int n, const ncg::Rat& alpha) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  bool found = false;
  ncg::Rat best;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<int>> adj(n);
    int m = 0;
    for (size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) {
        adj[pairs[b].first].push_back(pairs[b].second);
        adj[pairs[b].second].push_back(pairs[b].first);
        ++m;
      }
    long long dsum = 0;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      auto dist = oracle_bfs(adj, u);
      for (int d : dist) {
        if (d < 0) ok = false;
        dsum += d;
      }
    }
    if (!ok) continue;
    ncg::Rat cost = alpha * ncg::Rat(m) + ncg::Rat(dsum);
    if (!found || cost < best) {
      best = cost;
      found = true;
    }
  }
  return best;
}

// Direct equilibrium test: re-derive every player's cost over all of their
// 2^(n-1) strategies with fresh BFS sums.
inline bool oracle_is_ne(const ncg::StrategyVector& s) {
  const int n = s.n;
  auto cost_of = [&](int u, unsigned own) {
    std::vector<std::vector<int>> adj(n);
    for (int w = 0; w < n; ++w)
      for (int v : s.strategies[w]) {
        if (w == u) continue;
        adj[w].push_back(v);
        adj[v].push_back(w);
      }
    int k = 0;
    for (int v = 0; v < n; ++v)
      if ((own >> v) & 1u) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++k;
      }
    auto dist = oracle_bfs(adj, u);
    long long dsum = 0;
    for (int d : dist)
      if (d < 0)
        return std::pair<bool, ncg::Rat>(false, ncg::Rat(0));
      else
        dsum += d;
    return std::pair<bool, ncg::Rat>(true,
                                     s.alpha * ncg::Rat(k) + ncg::Rat(dsum));
  };
  for (int u = 0; u < n; ++u) {
    unsigned cur = 0;
    for (int v : s.strategies[u]) cur |= 1u << v;
    auto [cfin, cval] = cost_of(u, cur);
    for (unsigned own = 0; own < (1u << n); ++own) {
      if ((own >> u) & 1u) continue;
      if (own == cur) continue;
      auto [fin, val] = cost_of(u, own);
      if (!fin) continue;
      if (!cfin || val < cval) return false;
    }
  }
  return true;
}

// Uniform random simple graph with a connectivity retry loop.
inline ncg::Graph random_connected_graph(std::mt19937& rng, int n,
                                         double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng) < edge_prob) edges.emplace_back(i, j);
    ncg::Graph g(n, edges);
    if (g.connected()) return g;
  }
}

}  // namespace testutil
