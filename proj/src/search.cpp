#include "ncg/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "bit_bfs.hpp"
#include "ncg/audit.hpp"
#include "ncg/deviations.hpp"
#include "ncg/parallel.hpp"

namespace ncg {

namespace {

constexpr int kHardNodeCap = 6;  // n=7 already means 2^21 masks x 5040 relabelings

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Canonical key of a directed profile: bit u*n+v set iff u buys (u,v);
// minimized over all node relabelings.
uint64_t directed_mask(int n, const uint32_t* buys) {
  uint64_t m = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if ((buys[u] >> v) & 1u) m |= uint64_t(1) << (u * n + v);
  return m;
}

uint64_t canonical_dmask(int n, uint64_t mask,
                         const std::vector<std::vector<int>>& perms) {
  uint64_t best = mask;
  for (const auto& p : perms) {
    uint64_t rel = 0;
    for (uint64_t f = mask; f;) {
      int b = std::countr_zero(f);
      f &= f - 1;
      int u = b / n, v = b % n;
      rel |= uint64_t(1) << (p[u] * n + p[v]);
    }
    best = std::min(best, rel);
  }
  return best;
}

StrategyVector profile_from_dmask(int n, const Rat& alpha, uint64_t mask) {
  std::vector<std::vector<int>> strategies(n);
  for (uint64_t f = mask; f;) {
    int b = std::countr_zero(f);
    f &= f - 1;
    strategies[b / n].push_back(b % n);
  }
  return StrategyVector::create(n, alpha, std::move(strategies));
}

// ---------------------------------------------------------------------------
// Undirected graph classes up to isomorphism, cached per n.

struct GraphClass {
  std::vector<std::pair<int, int>> edges;  // lexicographic
  bool connected = false;
};

const std::vector<GraphClass>& graph_classes(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<GraphClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const int np = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> bit_of(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bit_of[i][j] = bit_of[j][i] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }

  auto perms = permutations(n);
  // Per-permutation bit remapping tables; identity (first) skipped below.
  std::vector<std::vector<int>> remap(perms.size(), std::vector<int>(np));
  for (size_t pi = 0; pi < perms.size(); ++pi)
    for (int b = 0; b < np; ++b)
      remap[pi][b] = bit_of[perms[pi][pairs[b].first]]
                           [perms[pi][pairs[b].second]];

  std::vector<GraphClass> classes;
  for (uint32_t mask = 0; mask < (1u << np); ++mask) {
    bool canonical = true;
    for (size_t pi = 1; pi < perms.size() && canonical; ++pi) {
      uint32_t rel = 0;
      for (uint32_t f = mask; f;) {
        int b = std::countr_zero(f);
        f &= f - 1;
        rel |= 1u << remap[pi][b];
      }
      if (rel < mask) canonical = false;
    }
    if (!canonical) continue;

    GraphClass gc;
    uint32_t adj[8] = {0};
    for (uint32_t f = mask; f;) {
      int b = std::countr_zero(f);
      f &= f - 1;
      gc.edges.push_back(pairs[b]);
      adj[pairs[b].first] |= 1u << pairs[b].second;
      adj[pairs[b].second] |= 1u << pairs[b].first;
    }
    uint32_t all = (1u << n) - 1;
    gc.connected = detail::mask_bfs_sum(adj, all, 0) >= 0;
    classes.push_back(std::move(gc));
  }
  return cache.emplace(n, std::move(classes)).first->second;
}

// ---------------------------------------------------------------------------
// Exact equilibrium test on bitmask profiles. p/q is alpha.

bool fast_is_ne(int n, const uint32_t* adj, const uint32_t* buys, long long p,
                long long q) {
  const uint32_t all = (1u << n) - 1;
  for (int u = 0; u < n; ++u) {
    uint32_t fadj[8];
    for (int v = 0; v < n; ++v) fadj[v] = adj[v];
    const uint32_t bu = buys[u];
    fadj[u] &= ~bu;
    for (uint32_t f = bu; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      fadj[v] &= ~(1u << u);
    }
    uint32_t recv = 0;
    for (int v = 0; v < n; ++v)
      if (v != u && ((buys[v] >> u) & 1u)) recv |= 1u << v;

    long long d0 = detail::mask_bfs_sum_custom_source(fadj, all, u, recv | bu);
    int k0 = std::popcount(bu);

    const uint32_t others = all ^ (1u << u);
    uint32_t s = others;
    while (true) {
      if (s != bu) {
        long long d = detail::mask_bfs_sum_custom_source(fadj, all, u,
                                                         recv | s);
        if (d >= 0) {
          if (d0 < 0) return false;  // current cost infinite, s is finite
          __int128 cand = static_cast<__int128>(p) * std::popcount(s) +
                          static_cast<__int128>(q) * d;
          __int128 cur = static_cast<__int128>(p) * k0 +
                         static_cast<__int128>(q) * d0;
          if (cand < cur) return false;
        }
      }
      if (s == 0) break;
      s = (s - 1) & others;
    }
  }
  return true;
}

StrategyVector profile_from_bits(int n, const Rat& alpha,
                                 const std::vector<std::pair<int, int>>& edges,
                                 uint32_t orient) {
  std::vector<std::vector<int>> strategies(n);
  for (size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if ((orient >> i) & 1u)
      strategies[a].push_back(b);
    else
      strategies[b].push_back(a);
  }
  return StrategyVector::create(n, alpha, std::move(strategies));
}

}  // namespace

StrategyVector canonical_profile(const StrategyVector& s) {
  if (s.n > 8) throw std::invalid_argument("canonicalization needs n <= 8");
  uint32_t buys[8] = {0};
  for (int u = 0; u < s.n; ++u)
    for (int v : s.strategies[u]) buys[u] |= 1u << v;
  auto perms = permutations(s.n);
  uint64_t canon = canonical_dmask(s.n, directed_mask(s.n, buys), perms);
  return profile_from_dmask(s.n, s.alpha, canon);
}

std::vector<StrategyVector> enumerate_ne(const SearchSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (spec.alpha <= Rat(0)) throw std::invalid_argument("alpha must be > 0");
  if (n > spec.node_limit)
    throw EnumerationLimitError(
        "exhaustive enumeration limited to n <= " +
        std::to_string(spec.node_limit) + " (asked for n=" +
        std::to_string(n) + "); lower n or raise --exhaustive-limit");
  if (n > kHardNodeCap)
    throw EnumerationLimitError(
        "exhaustive enumeration is not feasible beyond n=" +
        std::to_string(kHardNodeCap) + " with this engine");

  const long long p = spec.alpha.numerator();
  const long long q = spec.alpha.denominator();
  auto perms = permutations(n);

  if (spec.naive) {
    if (n > 4)
      throw EnumerationLimitError("naive enumeration limited to n <= 4");
    // Every assignment of the n(n-1) ordered pairs, no symmetry reduction,
    // verified with the deviation-based checker (independent of the fast
    // path on purpose).
    std::vector<std::pair<int, int>> ordered;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) ordered.emplace_back(u, v);
    std::set<uint64_t> canon;
    for (uint64_t m = 0; m < (uint64_t(1) << ordered.size()); ++m) {
      std::vector<std::vector<int>> strategies(n);
      for (size_t b = 0; b < ordered.size(); ++b)
        if ((m >> b) & 1u) strategies[ordered[b].first].push_back(
            ordered[b].second);
      StrategyVector s =
          StrategyVector::create(n, spec.alpha, std::move(strategies));
      if (!is_nash(s, VerifyMode::Exact).is_equilibrium) continue;
      uint32_t buys[8] = {0};
      for (int u = 0; u < n; ++u)
        for (int v : s.strategies[u]) buys[u] |= 1u << v;
      canon.insert(canonical_dmask(n, directed_mask(n, buys), perms));
    }
    std::vector<StrategyVector> out;
    for (uint64_t m : canon) out.push_back(profile_from_dmask(n, spec.alpha, m));
    return out;
  }

  const auto& classes = graph_classes(n);
  std::vector<int> picked;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].connected || spec.include_disconnected)
      picked.push_back(static_cast<int>(i));

  std::vector<std::set<uint64_t>> found(picked.size());
  parallel_for(static_cast<int>(picked.size()), [&](int idx) {
    const GraphClass& gc = classes[picked[idx]];
    const int m = static_cast<int>(gc.edges.size());
    uint32_t adj[8] = {0};
    for (auto [a, b] : gc.edges) {
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
    }
    for (uint32_t orient = 0; orient < (1u << m); ++orient) {
      uint32_t buys[8] = {0};
      for (int i = 0; i < m; ++i) {
        auto [a, b] = gc.edges[i];
        if ((orient >> i) & 1u)
          buys[a] |= 1u << b;
        else
          buys[b] |= 1u << a;
      }
      if (!spec.prune_filters.empty()) {
        AuditOptions opt;
        opt.checks = spec.prune_filters;
        StrategyVector s = profile_from_bits(n, spec.alpha, gc.edges, orient);
        if (!run_audit(s, opt).ok()) continue;  // contrapositive pruning
      }
      if (fast_is_ne(n, adj, buys, p, q))
        found[idx].insert(canonical_dmask(n, directed_mask(n, buys), perms));
    }
  });

  std::set<uint64_t> merged;
  for (const auto& part : found) merged.insert(part.begin(), part.end());
  std::vector<StrategyVector> out;
  for (uint64_t m : merged) out.push_back(profile_from_dmask(n, spec.alpha, m));
  return out;
}

DynamicsResult best_response_dynamics(const StrategyVector& s0,
                                      int max_rounds) {
  DynamicsResult out;
  out.trajectory.push_back(s0);
  StrategyVector cur = s0;
  for (int round = 1; round <= max_rounds; ++round) {
    bool changed = false;
    for (int u = 0; u < cur.n; ++u) {
      Cost now = player_cost(cur, u).total;
      BestResponse br = best_response(cur, u);
      if (br.cost < now) {
        cur.strategies[u] = br.strategy;
        changed = true;
      }
    }
    if (!changed) {
      out.status = DynamicsStatus::ConvergedNe;
      return out;
    }
    out.rounds = round;
    for (const auto& prev : out.trajectory) {
      if (prev.strategies == cur.strategies) {
        out.trajectory.push_back(cur);
        out.status = DynamicsStatus::Cycle;
        return out;
      }
    }
    out.trajectory.push_back(cur);
  }
  out.status = DynamicsStatus::RoundCap;
  return out;
}

std::vector<PoaRow> poa_table(const std::vector<int>& ns,
                              const std::vector<Rat>& alphas) {
  std::vector<PoaRow> rows;
  for (int n : ns) {
    for (const Rat& a : alphas) {
      SearchSpec sp;
      sp.n = n;
      sp.alpha = a;
      auto nes = enumerate_ne(sp);
      PoaRow row;
      row.n = n;
      row.alpha = a;
      row.ne_classes = static_cast<int>(nes.size());
      row.opt_cost = optimum_cost(n, a).cost.value();
      if (!nes.empty()) {
        Rat worst(0);
        for (const auto& s : nes) {
          worst = std::max(worst, social_cost(s).value());
          bool tree =
              build_comm_graph(s).graph().edge_count() == n - 1;
          if (!tree) {
            row.all_trees = false;
            if (a > Rat(n)) row.nontree_above_n = true;
          }
        }
        row.max_cost = worst;
        row.poa = worst / row.opt_cost;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ncg
