#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncg/game.hpp"

namespace ncg {

/// Largest n for which exact best response (2^{n-1} candidates per player)
/// is allowed by default.
inline constexpr int kDefaultExhaustiveNodeLimit = 16;

enum class DeviationKind {
  AddOne,
  DropOne,
  SwapOne,
  DropAllBuyOne,
  TwoSwap,
  DropTwoBuyOne,
  Arbitrary,
};

std::string to_string(DeviationKind k);

struct Deviation {
  int player = -1;
  std::vector<int> new_strategy;  // sorted
  DeviationKind kind = DeviationKind::Arbitrary;
};

/// Error for exhaustive operations asked to exceed their configured limit.
struct ExhaustiveLimitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// c_player(s with d applied) - c_player(s). +inf when the deviation
/// disconnects the player, -inf when it reconnects them.
Cost cost_delta(const StrategyVector& s, const Deviation& d);

struct BestResponse {
  Cost cost;
  std::vector<int> strategy;  // lexicographically smallest argmin
};

/// Global minimum of c_u over all 2^{n-1} strategies of u, others fixed.
BestResponse best_response(const StrategyVector& s, int u,
                           int exhaustive_limit = kDefaultExhaustiveNodeLimit);

enum class VerifyMode { Exact, FamilyRestricted };

struct VerificationVerdict {
  bool is_equilibrium = false;
  VerifyMode method = VerifyMode::Exact;
  std::optional<Deviation> witness;  // present iff !is_equilibrium
  Cost witness_delta;                // meaningful iff witness, always < 0
};

/// Exact mode certifies both answers. Family mode checks only the named
/// deviation families: sound for refutation, not certification.
VerificationVerdict is_nash(const StrategyVector& s, VerifyMode mode,
                            int exhaustive_limit = kDefaultExhaustiveNodeLimit);

/// All add-one, drop-one, swap-one, drop-all-buy-one, drop-two-buy-one
/// deviations of u, then every 2-swap available to u (u owns (u,v), v is a
/// 2-node of a non-trivial component, rewire to v's forward neighbor).
std::vector<Deviation> family_deviations(const StrategyVector& s, int u);

/// Human-readable witness line, e.g. "player 0 drop {1}: delta -2".
std::string describe(const Deviation& d, const StrategyVector& before,
                     const Cost& delta);

}  // namespace ncg
