#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncg {

/// Distance sentinel for unreachable nodes.
inline constexpr int kUnreached = -1;

/// Immutable simple undirected graph on nodes 0..n-1. Construct once, then
/// share freely across threads; there are no mutators.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int node_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Single-source BFS; kUnreached marks nodes in other components.
std::vector<int> bfs_distances(const Graph& g, int source);

/// BFS in the subgraph induced by dropping `banned` nodes and, optionally,
/// one edge. Distances to banned nodes are kUnreached.
std::vector<int> bfs_distances_avoiding(
    const Graph& g, int source, const std::vector<char>& banned,
    std::optional<std::pair<int, int>> banned_edge = std::nullopt);

/// Eccentricity-based diameter; requires a connected graph.
int diameter(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// k-th power: u~v iff 1 <= d(u,v) <= k. Requires k >= 1.
Graph graph_power(const Graph& g, int k);

/// A simple cycle u_0 - u_1 - ... - u_{k-1} - u_0, stored without the
/// closing repeat.
struct CyclePath {
  std::vector<int> nodes;
  int length() const { return static_cast<int>(nodes.size()); }
};

/// Throws std::invalid_argument unless `c` is a simple cycle of length >= 3
/// whose consecutive nodes are adjacent in g.
void validate_cycle(const Graph& g, const CyclePath& c);

/// True iff distances along the cycle agree with distances in g for every
/// pair of cycle nodes (the cycle embeds isometrically).
bool is_minimal_cycle(const Graph& g, const CyclePath& c);

/// A minimum-perimeter cycle through edge (u, v): the edge plus a shortest
/// u-v path avoiding it. nullopt when (u, v) is a bridge. Deterministic
/// tie-break via BFS parent order.
std::optional<CyclePath> minimal_cycle_through(const Graph& g, int u, int v);

/// One 2-edge-connected component; `weights[i]` is the number of nodes that
/// hang off nodes[i] through bridges (the node itself included), so the
/// weights over all components sum to n.
struct TwoEdgeComponent {
  std::vector<int> nodes;                      // sorted ascending
  std::vector<std::pair<int, int>> edges;      // internal edges, u < v, sorted
  std::vector<long long> weights;              // aligned with nodes
  bool non_trivial() const { return nodes.size() >= 3; }
  bool contains(int v) const;
  long long weight_of(int v) const;            // throws if v not a member
};

struct BridgeDecomposition {
  std::vector<std::pair<int, int>> bridges;    // u < v, sorted
  std::vector<TwoEdgeComponent> components;    // ordered by smallest node
  std::vector<int> component_index;            // node -> components[] position
};

/// Bridges via DFS lowlink, components of the bridgeless remainder, and the
/// hanging-tree weights. Requires a connected graph.
BridgeDecomposition bridges_and_components(const Graph& g);

}  // namespace ncg
