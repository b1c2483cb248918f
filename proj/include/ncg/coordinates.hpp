#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncg/deviations.hpp"
#include "ncg/game.hpp"
#include "ncg/graph.hpp"

namespace ncg {

/// Distances to the boundary of a subgraph X, measured while avoiding X's
/// interior (the hanging trees of X's non-boundary nodes). Coordinates exist
/// for every node outside the interior; boundary nodes get (0, d) / (d, 0).
struct CoordinateSystem {
  std::vector<int> boundary;               // 2 or 3 nodes, axis order fixed
  std::vector<char> interior;              // per-node: 1 iff inside X-bar
  std::vector<std::array<int, 3>> coords;  // kUnreached = infinite/excluded

  int node_count() const { return static_cast<int>(coords.size()); }
  bool in_interior(int v) const { return interior[v] != 0; }
  int coord(int axis, int v) const { return coords[v][axis]; }
};

struct SeparationError : std::invalid_argument {
  SeparationError(const std::string& msg, std::vector<int> path)
      : std::invalid_argument(msg), witness_path(std::move(path)) {}
  /// A path from the interior side to an outside node avoiding the boundary.
  std::vector<int> witness_path;
};

/// Builds the coordinate system for subgraph X (given by its node set) of a
/// non-trivial 2-edge-connected component of g. Throws SeparationError when
/// the interior can reach the outside without crossing the boundary.
CoordinateSystem build_coords(const Graph& g, const std::vector<int>& x_nodes,
                              const std::vector<int>& boundary);

/// <...> / [...] counting query. Offsets align with the boundary axes.
/// For the angle form, the minimum over underlined expressions must be <=
/// every non-underlined expression; with every axis underlined the
/// comparison is vacuous and all nodes outside the interior count. Infinite
/// coordinates compare as a single top value. The equality form (pairs only)
/// counts nodes with x1 - x2 = b1 - b2, both coordinates finite.
struct BracketQuery {
  std::vector<long long> offsets;
  unsigned underline_mask = 1;
  bool equality = false;
};

long long bracket_count(const CoordinateSystem& cs, const BracketQuery& q);

/// Closed-form cost difference of the 2-swap on path[i+1]: the owner path[i]
/// drops its link to path[i+1] and buys one to path[i+2]. `path` must be a
/// 2-path of a non-trivial component (internal nodes all 2-nodes with
/// consistent ownership; a reversed path is normalized first, and i indexes
/// the normalized order) and the host girth must be >= 2k. Link counts
/// cancel, so the delta is an integer.
long long two_swap_delta_formula(const OwnedGraph& g,
                                 const std::vector<int>& path, int i);

/// The Deviation object matching two_swap_delta_formula's swap, for
/// brute-force comparison. Same normalization rules.
Deviation two_swap_deviation(const StrategyVector& s,
                             const std::vector<int>& path, int i);

}  // namespace ncg
