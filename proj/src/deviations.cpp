#include "ncg/deviations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "bit_bfs.hpp"

namespace ncg {

std::string to_string(DeviationKind k) {
  switch (k) {
    case DeviationKind::AddOne: return "add-one";
    case DeviationKind::DropOne: return "drop-one";
    case DeviationKind::SwapOne: return "swap-one";
    case DeviationKind::DropAllBuyOne: return "drop-all-buy-one";
    case DeviationKind::TwoSwap: return "two-swap";
    case DeviationKind::DropTwoBuyOne: return "drop-two-buy-one";
    default: return "arbitrary";
  }
}

namespace {

StrategyVector apply_deviation(const StrategyVector& s, const Deviation& d) {
  if (d.player < 0 || d.player >= s.n)
    throw std::invalid_argument("deviation player out of range");
  auto strategies = s.strategies;
  strategies[d.player] = d.new_strategy;
  return StrategyVector::create(s.n, s.alpha, std::move(strategies));
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

Cost cost_delta(const StrategyVector& s, const Deviation& d) {
  StrategyVector after = apply_deviation(s, d);
  return player_cost(after, d.player).total - player_cost(s, d.player).total;
}

BestResponse best_response(const StrategyVector& s, int u, int exhaustive_limit) {
  if (u < 0 || u >= s.n) throw std::invalid_argument("player out of range");
  if (s.n > exhaustive_limit)
    throw ExhaustiveLimitError("best_response: n exceeds exhaustive limit " +
                               std::to_string(exhaustive_limit));
  int n = s.n;
  if (n > 32) throw ExhaustiveLimitError("best_response: n above 32 unsupported");

  // Fixed part: everyone else's purchases. Shortest paths from u never
  // revisit u, so candidate evaluation only swaps u's outgoing mask.
  uint32_t adj[32] = {0};
  uint32_t recv = 0;
  for (int v = 0; v < n; ++v) {
    if (v == u) continue;
    for (int w : s.strategies[v]) {
      if (w == u) {
        recv |= 1u << v;
        continue;
      }
      adj[v] |= 1u << w;
      adj[w] |= 1u << v;
    }
  }
  uint32_t all = (n == 32) ? ~0u : (1u << n) - 1;
  long long p = s.alpha.numerator(), q = s.alpha.denominator();

  bool have = false;
  bool best_inf = true;
  __int128 best_scaled = 0;  // (alpha*k + D) * q, valid when !best_inf
  long long best_k = 0, best_d = 0;
  std::vector<int> best_set;
  auto mask_to_set = [&](uint32_t m) {
    std::vector<int> out;
    for (uint32_t bits = m; bits;) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      out.push_back(v);
    }
    return out;
  };

  uint32_t candidates = all & ~(1u << u);
  // Iterate subsets of `candidates` including the empty set.
  uint32_t m = 0;
  while (true) {
    long long dist = detail::mask_bfs_sum_custom_source(adj, all, u, m | recv);
    bool inf = dist < 0;
    int k = std::popcount(m);
    __int128 scaled = inf ? 0 : static_cast<__int128>(p) * k + static_cast<__int128>(q) * dist;
    bool better, tie;
    if (!have) {
      better = true;
      tie = false;
    } else if (inf != best_inf) {
      better = !inf;
      tie = false;
    } else if (inf) {
      better = false;
      tie = true;
    } else {
      better = scaled < best_scaled;
      tie = scaled == best_scaled;
    }
    if (better || tie) {
      auto set = mask_to_set(m);
      if (better || set < best_set) {
        have = true;
        best_inf = inf;
        best_scaled = scaled;
        best_k = k;
        best_d = inf ? 0 : dist;
        best_set = std::move(set);
      }
    }
    if (m == candidates) break;
    m = (m - candidates) & candidates;  // next subset
  }
  Cost cost = best_inf ? Cost(s.alpha * best_k) + Cost::infinity()
                       : Cost(s.alpha * best_k + best_d);
  return BestResponse{cost, std::move(best_set)};
}

namespace {

// Tag a (removed, added) difference with the most specific family. Two-swap
// structure (u owned a link to a 2-node and rewired forward) upgrades the
// swap-one tag.
DeviationKind classify(const StrategyVector& s, int u,
                       const std::vector<int>& removed,
                       const std::vector<int>& added) {
  size_t old_size = s.strategies[u].size();
  if (removed.empty() && added.size() == 1) return DeviationKind::AddOne;
  if (removed.size() == 1 && added.empty()) return DeviationKind::DropOne;
  if (removed.size() == 1 && added.size() == 1) {
    int v = removed[0], w = added[0];
    OwnedGraph g = build_comm_graph(s);
    if (g.graph().has_edge(u, v)) {
      try {
        auto decomp = bridges_and_components(g.graph());
        const auto& comp = decomp.components[decomp.component_index[v]];
        if (comp.non_trivial() && comp.contains(u)) {
          int bought = 0, received = 0, forward = -1;
          for (auto [a, b] : comp.edges) {
            if (a != v && b != v) continue;
            int other = (a == v) ? b : a;
            if (g.buys(v, other)) {
              ++bought;
              if (other != u) forward = other;
            }
            if (g.buys(other, v)) ++received;
          }
          if (bought == 1 && received == 1 && forward == w)
            return DeviationKind::TwoSwap;
        }
      } catch (const std::invalid_argument&) {
        // disconnected graph: plain swap
      }
    }
    return DeviationKind::SwapOne;
  }
  if (removed.size() == old_size && old_size >= 2 && added.size() == 1)
    return DeviationKind::DropAllBuyOne;
  if (removed.size() == 2 && added.size() == 1) return DeviationKind::DropTwoBuyOne;
  return DeviationKind::Arbitrary;
}

}  // namespace

VerificationVerdict is_nash(const StrategyVector& s, VerifyMode mode,
                            int exhaustive_limit) {
  VerificationVerdict verdict;
  verdict.method = mode;
  if (mode == VerifyMode::Exact) {
    for (int u = 0; u < s.n; ++u) {
      Cost current = player_cost(s, u).total;
      BestResponse br = best_response(s, u, exhaustive_limit);
      if (br.cost < current) {
        auto removed = set_minus(s.strategies[u], br.strategy);
        auto added = set_minus(br.strategy, s.strategies[u]);
        verdict.is_equilibrium = false;
        verdict.witness = Deviation{u, br.strategy, classify(s, u, removed, added)};
        verdict.witness_delta = br.cost - current;
        return verdict;
      }
    }
    verdict.is_equilibrium = true;
    return verdict;
  }
  for (int u = 0; u < s.n; ++u) {
    for (const Deviation& d : family_deviations(s, u)) {
      Cost delta = cost_delta(s, d);
      if (delta < Cost(Rat(0))) {
        verdict.is_equilibrium = false;
        verdict.witness = d;
        verdict.witness_delta = delta;
        return verdict;
      }
    }
  }
  verdict.is_equilibrium = true;  // no family deviation improves; not a certificate
  return verdict;
}

std::vector<Deviation> family_deviations(const StrategyVector& s, int u) {
  if (u < 0 || u >= s.n) throw std::invalid_argument("player out of range");
  const auto& own = s.strategies[u];
  std::vector<Deviation> out;
  auto others_not_bought = [&] {
    std::vector<int> out_v;
    for (int w = 0; w < s.n; ++w)
      if (w != u && !s.buys(u, w)) out_v.push_back(w);
    return out_v;
  }();

  for (int w : others_not_bought) {
    auto next = own;
    next.insert(std::lower_bound(next.begin(), next.end(), w), w);
    out.push_back({u, std::move(next), DeviationKind::AddOne});
  }
  for (int v : own) {
    auto next = own;
    next.erase(std::find(next.begin(), next.end(), v));
    out.push_back({u, std::move(next), DeviationKind::DropOne});
  }
  for (int v : own)
    for (int w : others_not_bought) {
      auto next = own;
      next.erase(std::find(next.begin(), next.end(), v));
      next.insert(std::lower_bound(next.begin(), next.end(), w), w);
      out.push_back({u, std::move(next), DeviationKind::SwapOne});
    }
  if (own.size() >= 2)
    for (int w : others_not_bought)
      out.push_back({u, {w}, DeviationKind::DropAllBuyOne});
  if (own.size() >= 2)
    for (size_t i = 0; i < own.size(); ++i)
      for (size_t j = i + 1; j < own.size(); ++j)
        for (int w : others_not_bought) {
          std::vector<int> next;
          for (size_t t = 0; t < own.size(); ++t)
            if (t != i && t != j) next.push_back(own[t]);
          next.insert(std::lower_bound(next.begin(), next.end(), w), w);
          out.push_back({u, std::move(next), DeviationKind::DropTwoBuyOne});
        }

  // 2-swaps: u owns (u,v), v is a 2-node of a non-trivial component; rewire
  // to v's forward neighbor w.
  if (!own.empty()) {
    OwnedGraph g = build_comm_graph(s);
    if (g.graph().connected()) {
      auto decomp = bridges_and_components(g.graph());
      for (int v : own) {
        const auto& comp = decomp.components[decomp.component_index[v]];
        if (!comp.non_trivial() || !comp.contains(u)) continue;
        int bought = 0, received = 0, forward = -1, h_degree = 0;
        for (auto [a, b] : comp.edges) {
          if (a != v && b != v) continue;
          ++h_degree;
          int other = (a == v) ? b : a;
          if (g.buys(v, other)) {
            ++bought;
            if (other != u) forward = other;
          }
          if (g.buys(other, v)) ++received;
        }
        if (h_degree != 2 || bought != 1 || received != 1 || forward == -1)
          continue;
        if (s.buys(u, forward)) continue;  // degenerate (triangle in H)
        auto next = own;
        next.erase(std::find(next.begin(), next.end(), v));
        next.insert(std::lower_bound(next.begin(), next.end(), forward), forward);
        out.push_back({u, std::move(next), DeviationKind::TwoSwap});
      }
    }
  }
  return out;
}

std::string describe(const Deviation& d, const StrategyVector& before,
                     const Cost& delta) {
  auto removed = set_minus(before.strategies[d.player], d.new_strategy);
  auto added = set_minus(d.new_strategy, before.strategies[d.player]);
  auto set_str = [](const std::vector<int>& set) {
    std::string out = "{";
    for (size_t i = 0; i < set.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(set[i]);
    }
    return out + "}";
  };
  std::string head = "player " + std::to_string(d.player) + ' ';
  switch (d.kind) {
    case DeviationKind::AddOne: head += "add " + set_str(added); break;
    case DeviationKind::DropOne: head += "drop " + set_str(removed); break;
    case DeviationKind::SwapOne:
      head += "swap " + set_str(removed) + "->" + set_str(added);
      break;
    case DeviationKind::TwoSwap:
      head += "two-swap " + set_str(removed) + "->" + set_str(added);
      break;
    case DeviationKind::DropAllBuyOne:
      head += "drop-all buy " + set_str(added);
      break;
    case DeviationKind::DropTwoBuyOne:
      head += "drop " + set_str(removed) + " buy " + set_str(added);
      break;
    default: head += "set " + set_str(d.new_strategy); break;
  }
  return head + ": delta " + delta.str();
}

}  // namespace ncg
