#pragma once

// Bitmask BFS helpers for graphs on at most 8 nodes. Node sets are uint32_t
// masks; adjacency is one mask per node.

#include <bit>
#include <cstdint>

namespace ncg::detail {

// Sum of BFS distances from `source` to every node of `all`, or -1 if some
// node of `all` is unreachable. `adj` must describe an undirected graph.
inline long long mask_bfs_sum(const uint32_t* adj, uint32_t all, int source) {
  uint32_t visited = 1u << source;
  uint32_t frontier = adj[source] & all & ~visited;
  long long sum = 0;
  int depth = 1;
  while (frontier) {
    sum += static_cast<long long>(depth) * std::popcount(frontier);
    visited |= frontier;
    uint32_t next = 0;
    for (uint32_t f = frontier; f;) {
      int x = std::countr_zero(f);
      f &= f - 1;
      next |= adj[x];
    }
    frontier = next & all & ~visited;
    ++depth;
  }
  return visited == all ? sum : -1;
}

// Like mask_bfs_sum but with the source's own adjacency overridden (the
// source's outgoing links are per-candidate while everyone else is fixed).
inline long long mask_bfs_sum_custom_source(const uint32_t* adj, uint32_t all,
                                            int source, uint32_t source_adj) {
  uint32_t visited = 1u << source;
  uint32_t frontier = source_adj & all & ~visited;
  long long sum = 0;
  int depth = 1;
  while (frontier) {
    sum += static_cast<long long>(depth) * std::popcount(frontier);
    visited |= frontier;
    uint32_t next = 0;
    for (uint32_t f = frontier; f;) {
      int x = std::countr_zero(f);
      f &= f - 1;
      next |= adj[x];
    }
    frontier = next & all & ~visited;
    ++depth;
  }
  return visited == all ? sum : -1;
}

}  // namespace ncg::detail
