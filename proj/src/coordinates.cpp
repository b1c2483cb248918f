#include "ncg/coordinates.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncg {

namespace {

// Big-but-safe sentinel for "unreachable" in bracket arithmetic; offsets are
// small so this never overflows when compared.
constexpr long long kInf = LLONG_MAX / 4;

std::string join_nodes(const std::vector<int>& nodes) {
  std::ostringstream out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out << ' ';
    out << nodes[i];
  }
  return out.str();
}

}  // namespace

CoordinateSystem build_coords(const Graph& g, const std::vector<int>& x_nodes,
                              const std::vector<int>& boundary) {
  const int n = g.node_count();
  if (boundary.size() != 2 && boundary.size() != 3)
    throw std::invalid_argument("boundary must have 2 or 3 nodes");
  std::set<int> xset;
  for (int v : x_nodes) {
    if (v < 0 || v >= n) throw std::invalid_argument("x node out of range");
    if (!xset.insert(v).second)
      throw std::invalid_argument("duplicate node in subgraph");
  }
  std::set<int> bset;
  for (int b : boundary) {
    if (!xset.count(b))
      throw std::invalid_argument("boundary node not in subgraph");
    if (!bset.insert(b).second)
      throw std::invalid_argument("duplicate boundary node");
  }

  if (!g.connected()) throw std::invalid_argument("graph must be connected");
  BridgeDecomposition decomp = bridges_and_components(g);
  int comp = -1;
  for (int v : x_nodes) {
    int c = decomp.component_index[v];
    if (comp == -1) comp = c;
    if (c != comp)
      throw std::invalid_argument(
          "subgraph spans multiple two-edge-connected components");
  }
  if (comp == -1 || !decomp.components[comp].non_trivial())
    throw std::invalid_argument("subgraph not inside a non-trivial component");
  const TwoEdgeComponent& tc = decomp.components[comp];

  CoordinateSystem cs;
  cs.boundary = boundary;
  cs.interior.assign(n, 0);

  // Interior = union of hanging trees T(x) over non-boundary nodes of X.
  // T(x) is what stays attached to x once the rest of x's component is
  // removed, so BFS from x banning every other component node.
  std::vector<char> ban(n, 0);
  for (int v : tc.nodes) ban[v] = 1;
  for (int x : x_nodes) {
    if (bset.count(x)) continue;
    ban[x] = 0;
    std::vector<int> dist = bfs_distances_avoiding(g, x, ban);
    ban[x] = 1;
    for (int v = 0; v < n; ++v)
      if (dist[v] != kUnreached) cs.interior[v] = 1;
  }

  // Separation check: walking out of the interior must hit the boundary
  // before anything else. BFS from interior nodes with the boundary banned;
  // any node reached that is not itself interior is a leak.
  {
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
      if (cs.interior[v]) {
        seen[v] = 1;
        q.push(v);
      }
    for (int b : boundary) seen[b] = 1;  // banned
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        if (!cs.interior[w]) {
          std::vector<int> path{w};
          for (int p = v; p != -1; p = parent[p]) path.push_back(p);
          std::reverse(path.begin(), path.end());
          throw SeparationError(
              "interior leaks past boundary: path " + join_nodes(path), path);
        }
        q.push(w);
      }
    }
  }

  cs.coords.assign(n, {kUnreached, kUnreached, kUnreached});
  for (size_t a = 0; a < boundary.size(); ++a) {
    std::vector<int> dist = bfs_distances_avoiding(g, boundary[a], cs.interior);
    for (int v = 0; v < n; ++v) cs.coords[v][a] = dist[v];
  }
  return cs;
}

long long bracket_count(const CoordinateSystem& cs, const BracketQuery& q) {
  const size_t axes = cs.boundary.size();
  if (q.offsets.size() != axes)
    throw std::invalid_argument("offset count must match boundary size");
  if (q.equality) {
    if (axes != 2)
      throw std::invalid_argument("equality bracket needs exactly 2 axes");
    if (q.underline_mask != 0)
      throw std::invalid_argument("equality bracket takes no underlines");
  } else {
    if (q.underline_mask == 0)
      throw std::invalid_argument("at least one coordinate must be underlined");
    if (q.underline_mask >= (1u << axes))
      throw std::invalid_argument("underline mask out of range");
  }

  long long count = 0;
  const int n = static_cast<int>(cs.coords.size());
  for (int v = 0; v < n; ++v) {
    if (cs.interior[v]) continue;
    if (q.equality) {
      int x1 = cs.coords[v][0], x2 = cs.coords[v][1];
      if (x1 == kUnreached || x2 == kUnreached) continue;
      if (static_cast<long long>(x1) - x2 == q.offsets[0] - q.offsets[1])
        ++count;
      continue;
    }
    long long min_under = kInf;
    long long min_plain = kInf;
    for (size_t a = 0; a < axes; ++a) {
      long long e = cs.coords[v][a] == kUnreached
                        ? kInf
                        : cs.coords[v][a] + q.offsets[a];
      if (q.underline_mask & (1u << a))
        min_under = std::min(min_under, e);
      else
        min_plain = std::min(min_plain, e);
    }
    if (min_under <= min_plain) ++count;
  }
  return count;
}

namespace {

// Validates that `path` is a 2-path of g (per the swap machinery's
// requirements) and returns it in forward orientation: every internal node is
// a 2-node of its component, each internal node's single purchase is its
// successor, and u0 buys u1. A path given in the reverse orientation is
// flipped; anything else is rejected.
std::vector<int> normalize_two_path(const OwnedGraph& g,
                                    std::vector<int> path) {
  const Graph& gr = g.graph();
  const int n = gr.node_count();
  if (path.size() < 3) throw std::invalid_argument("2-path needs length >= 2");
  std::set<int> seen;
  for (int v : path) {
    if (v < 0 || v >= n) throw std::invalid_argument("path node out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("path nodes must be distinct");
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!gr.has_edge(path[i], path[i + 1]))
      throw std::invalid_argument("path nodes must be consecutively adjacent");

  if (!gr.connected()) throw std::invalid_argument("graph must be connected");
  BridgeDecomposition decomp = bridges_and_components(gr);
  int comp = decomp.component_index[path[0]];
  for (int v : path)
    if (decomp.component_index[v] != comp)
      throw std::invalid_argument("path leaves its two-edge component");
  if (!decomp.components[comp].non_trivial())
    throw std::invalid_argument("path not inside a non-trivial component");

  // Internal nodes: exactly two component edges, one bought one received.
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    int v = path[i];
    int h_deg = 0, bought = 0;
    for (int w : gr.neighbors(v)) {
      // Same-component neighbors: the edge is never a bridge, so it's in H.
      if (decomp.component_index[w] != comp) continue;
      ++h_deg;
      if (g.buys(v, w)) ++bought;
      if (g.buys(v, w) && g.buys(w, v))
        throw std::invalid_argument("double-bought edge on path");
    }
    if (h_deg != 2)
      throw std::invalid_argument("internal path node is not a 2-node");
    if (bought != 1)
      throw std::invalid_argument("internal path node must buy exactly one edge");
  }

  // Orientation: each internal node buys its successor (forward) or its
  // predecessor (backward). Mixed orientations are not a valid 2-path.
  bool all_fwd = true, all_bwd = true;
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    if (!g.buys(path[i], path[i + 1])) all_fwd = false;
    if (!g.buys(path[i], path[i - 1])) all_bwd = false;
  }
  // u0 must own (u0,u1) in forward orientation (u1 buys u2, so if u1 also
  // bought u0 it would buy two edges).
  if (all_fwd && !g.buys(path[0], path[1])) all_fwd = false;
  if (all_bwd && !g.buys(path.back(), path[path.size() - 2])) all_bwd = false;
  if (all_fwd) return path;
  if (all_bwd) {
    std::reverse(path.begin(), path.end());
    return path;
  }
  throw std::invalid_argument("path edges not consistently oriented");
}

}  // namespace

long long two_swap_delta_formula(const OwnedGraph& g,
                                 const std::vector<int>& path_in, int i) {
  std::vector<int> path = normalize_two_path(g, path_in);
  const int k = static_cast<int>(path.size()) - 1;
  if (i < 0 || i > k - 2)
    throw std::invalid_argument("swap index out of range");
  std::optional<int> gr = girth(g.graph());
  if (gr && *gr < 2 * k)
    throw std::invalid_argument("girth too small for closed-form delta");

  CoordinateSystem cs = build_coords(g.graph(), path, {path[k], path[0]});

  BridgeDecomposition decomp = bridges_and_components(g.graph());
  const TwoEdgeComponent& tc =
      decomp.components[decomp.component_index[path[0]]];
  auto weight = [&](int v) { return tc.weight_of(v); };

  long long delta = weight(path[i + 1]);
  for (int j = i + 2; j <= k - 1; ++j) delta -= weight(path[j]);

  BracketQuery q;
  q.offsets = {static_cast<long long>(k - i), static_cast<long long>(i)};
  q.underline_mask = 0b01;  // first coordinate (distance to u_k) underlined
  delta -= bracket_count(cs, q);
  return delta;
}

Deviation two_swap_deviation(const StrategyVector& s,
                             const std::vector<int>& path_in, int i) {
  OwnedGraph g = build_comm_graph(s);
  std::vector<int> path = normalize_two_path(g, path_in);
  const int k = static_cast<int>(path.size()) - 1;
  if (i < 0 || i > k - 2)
    throw std::invalid_argument("swap index out of range");
  int u = path[i];
  std::set<int> ns(s.strategies[u].begin(), s.strategies[u].end());
  if (!ns.count(path[i + 1]))
    throw std::logic_error("normalized path owner mismatch");
  ns.erase(path[i + 1]);
  ns.insert(path[i + 2]);
  Deviation d;
  d.player = u;
  d.new_strategy.assign(ns.begin(), ns.end());
  d.kind = DeviationKind::TwoSwap;
  return d;
}

}  // namespace ncg
