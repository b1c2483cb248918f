#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/game.hpp"
#include "ncg/rational.hpp"

namespace ncg {

struct SearchSpec {
  int n = 0;
  Rat alpha;
  /// Also test candidates whose communication graph is disconnected
  /// (they are never equilibria; off by default).
  bool include_disconnected = false;
  /// Enumerate every directed profile directly instead of reducing by
  /// isomorphism first. Oracle mode; limited to very small n.
  bool naive = false;
  /// Audit check names used to discard candidates before exact
  /// verification (contrapositive pruning). Empty = no pruning.
  std::vector<std::string> prune_filters;
  /// Upper bound on n for enumerate mode.
  int node_limit = 6;
};

struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every Nash equilibrium at (n, alpha), one canonical representative per
/// class under node relabeling (graph isomorphism + ownership), sorted by
/// canonical key. Each returned profile passes exact verification.
std::vector<StrategyVector> enumerate_ne(const SearchSpec& spec);

/// Canonical representative of s under node relabeling.
StrategyVector canonical_profile(const StrategyVector& s);

enum class DynamicsStatus { ConvergedNe, Cycle, RoundCap };

struct DynamicsResult {
  DynamicsStatus status = DynamicsStatus::RoundCap;
  /// s0 followed by the state after each round that changed something.
  std::vector<StrategyVector> trajectory;
  /// Rounds that applied at least one strict improvement.
  int rounds = 0;
};

/// Round-robin exact best-response dynamics (ascending player id, ties
/// broken lexicographically). Stops at a fixed point (a Nash equilibrium),
/// a revisited profile, or the round cap.
DynamicsResult best_response_dynamics(const StrategyVector& s0,
                                      int max_rounds = 100);

struct PoaRow {
  int n = 0;
  Rat alpha;
  int ne_classes = 0;
  Rat max_cost;   // worst equilibrium social cost
  Rat opt_cost;
  Rat poa;
  bool all_trees = true;
  /// Tree-conjecture telemetry: a non-tree equilibrium at alpha > n.
  bool nontree_above_n = false;
};

/// Exact PoA per (n, alpha) cell via exhaustive enumeration.
std::vector<PoaRow> poa_table(const std::vector<int>& ns,
                              const std::vector<Rat>& alphas);

}  // namespace ncg
