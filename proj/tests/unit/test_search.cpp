#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "ncg/deviations.hpp"
#include "ncg/profile_io.hpp"
#include "ncg/search.hpp"

using namespace ncg;

namespace {

std::set<std::string> ne_keys(const SearchSpec& spec) {
  std::set<std::string> keys;
  for (const auto& s : enumerate_ne(spec)) keys.insert(write_profile(s));
  return keys;
}

StrategyVector relabel(const StrategyVector& s, const std::vector<int>& perm) {
  std::vector<std::vector<int>> strategies(s.n);
  for (int u = 0; u < s.n; ++u)
    for (int v : s.strategies[u]) strategies[perm[u]].push_back(perm[v]);
  return StrategyVector::create(s.n, s.alpha, std::move(strategies));
}

}  // namespace

TEST_CASE("enumerate_ne: class engine agrees with the naive profile sweep") {
  // The naive sweep walks all 2^{n(n-1)} directed profiles, including
  // double-buys and disconnected candidates, so agreement also confirms
  // that neither kind survives as an equilibrium.
  struct Cell {
    int n;
    Rat alpha;
  };
  std::vector<Cell> cells = {{3, Rat(1, 2)}, {3, Rat(1)},  {3, Rat(2)},
                             {3, Rat(3)},    {3, Rat(5)},  {4, Rat(1, 2)},
                             {4, Rat(1)},    {4, Rat(3)},  {4, Rat(17)}};
  for (const auto& cell : cells) {
    CAPTURE(cell.n);
    CAPTURE(to_string(cell.alpha));
    SearchSpec fast;
    fast.n = cell.n;
    fast.alpha = cell.alpha;
    SearchSpec naive = fast;
    naive.naive = true;
    CHECK(ne_keys(fast) == ne_keys(naive));
  }
}

TEST_CASE("enumerate_ne: every result is a certified equilibrium") {
  SearchSpec sp;
  sp.n = 4;
  sp.alpha = Rat(1);
  auto nes = enumerate_ne(sp);
  CHECK(nes.size() == 30);
  for (const auto& s : nes) {
    auto v = is_nash(s, VerifyMode::Exact);
    CHECK(v.is_equilibrium);
    CHECK(v.method == VerifyMode::Exact);
    auto og = build_comm_graph(s);
    CHECK(og.graph().connected());
    for (const auto& [a, b] : og.graph().edges())
      CHECK_FALSE(og.double_bought(a, b));
    CHECK(write_profile(s) == write_profile(canonical_profile(s)));
  }
}

TEST_CASE("enumerate_ne: frozen small cells") {
  auto count = [](int n, const Rat& a) {
    SearchSpec sp;
    sp.n = n;
    sp.alpha = a;
    return enumerate_ne(sp).size();
  };
  CHECK(count(2, Rat(1)) == 1);
  CHECK(count(3, Rat(1, 2)) == 2);  // the two triangle orientations
  CHECK(count(3, Rat(1)) == 5);
  CHECK(count(3, Rat(3)) == 3);
  CHECK(count(4, Rat(3)) == 5);

  // Below alpha = 1 every pair connects directly: the clique is forced.
  SearchSpec sp;
  sp.n = 3;
  sp.alpha = Rat(1, 2);
  for (const auto& s : enumerate_ne(sp))
    CHECK(build_comm_graph(s).graph().edge_count() == 3);
}

TEST_CASE("enumerate_ne: include_disconnected finds nothing extra") {
  SearchSpec sp;
  sp.n = 4;
  sp.alpha = Rat(3);
  auto base = ne_keys(sp);
  sp.include_disconnected = true;
  CHECK(ne_keys(sp) == base);
}

TEST_CASE("enumerate_ne: node caps and validation") {
  SearchSpec sp;
  sp.n = 7;
  sp.alpha = Rat(1);
  CHECK_THROWS_AS(enumerate_ne(sp), EnumerationLimitError);
  sp.node_limit = 10;  // the engine cap still applies
  CHECK_THROWS_AS(enumerate_ne(sp), EnumerationLimitError);

  sp.n = 3;
  sp.node_limit = 2;
  CHECK_THROWS_AS(enumerate_ne(sp), EnumerationLimitError);

  sp.node_limit = 6;
  sp.alpha = Rat(0);
  CHECK_THROWS_AS(enumerate_ne(sp), std::invalid_argument);
  sp.alpha = Rat(1);
  sp.n = 0;
  CHECK_THROWS_AS(enumerate_ne(sp), std::invalid_argument);

  SearchSpec naive;
  naive.n = 5;
  naive.alpha = Rat(1);
  naive.naive = true;
  CHECK_THROWS_AS(enumerate_ne(naive), EnumerationLimitError);
}

TEST_CASE("canonical_profile: invariant under relabeling, idempotent") {
  auto s = testutil::profile(5, Rat(2),
                             {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 0}});
  std::string key = write_profile(canonical_profile(s));
  CHECK(write_profile(canonical_profile(canonical_profile(s))) == key);

  std::mt19937 rng(987123);
  std::vector<int> perm = {0, 1, 2, 3, 4};
  for (int trial = 0; trial < 12; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(write_profile(canonical_profile(relabel(s, perm))) == key);
  }
}

TEST_CASE("best_response_dynamics: directed triangle settles in one round") {
  auto s0 = testutil::cycle_profile(3, Rat(3));
  auto res = best_response_dynamics(s0);
  CHECK(res.status == DynamicsStatus::ConvergedNe);
  CHECK(res.rounds == 1);
  REQUIRE(res.trajectory.size() == 2);
  CHECK(res.trajectory.front().strategies == s0.strategies);
  const auto& fin = res.trajectory.back();
  CHECK(social_cost(fin).value() == Rat(14));
  CHECK(build_comm_graph(fin).graph().edge_count() == 2);
  CHECK(is_nash(fin, VerifyMode::Exact).is_equilibrium);
}

TEST_CASE("best_response_dynamics: zero-round cap reports the cap") {
  auto s0 = testutil::cycle_profile(3, Rat(3));
  auto res = best_response_dynamics(s0, 0);
  CHECK(res.status == DynamicsStatus::RoundCap);
  CHECK(res.rounds == 0);
  CHECK(res.trajectory.size() == 1);
}

TEST_CASE("best_response_dynamics: invariants across random seeds") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coin(0, 3);
  const Rat alphas[] = {Rat(1, 2), Rat(2), Rat(5)};
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4;
    std::vector<std::vector<int>> strategies(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng) == 0) strategies[u].push_back(v);
    auto s0 = StrategyVector::create(n, alphas[trial % 3], strategies);
    auto res = best_response_dynamics(s0, 50);
    REQUIRE(!res.trajectory.empty());
    CHECK(res.trajectory.front().strategies == s0.strategies);
    CHECK(res.trajectory.size() == static_cast<size_t>(res.rounds) + 1);
    for (size_t i = 1; i < res.trajectory.size(); ++i)
      CHECK(res.trajectory[i].strategies != res.trajectory[i - 1].strategies);
    if (res.status == DynamicsStatus::ConvergedNe) {
      CHECK(is_nash(res.trajectory.back(), VerifyMode::Exact).is_equilibrium);
    } else if (res.status == DynamicsStatus::Cycle) {
      const auto& last = res.trajectory.back().strategies;
      bool seen = false;
      for (size_t i = 0; i + 1 < res.trajectory.size(); ++i)
        seen = seen || res.trajectory[i].strategies == last;
      CHECK(seen);
    }
  }
}

TEST_CASE("poa_table: rows are self-consistent and ordered") {
  std::vector<int> ns = {3, 4};
  std::vector<Rat> alphas = {Rat(1), Rat(3), Rat(17)};
  auto rows = poa_table(ns, alphas);
  REQUIRE(rows.size() == 6);
  size_t idx = 0;
  for (int n : ns) {
    for (const Rat& a : alphas) {
      const auto& row = rows[idx++];
      CHECK(row.n == n);
      CHECK(row.alpha == a);
      SearchSpec sp;
      sp.n = n;
      sp.alpha = a;
      auto nes = enumerate_ne(sp);
      CHECK(row.ne_classes == static_cast<int>(nes.size()));
      REQUIRE(row.ne_classes > 0);
      Rat worst(0);
      bool trees = true;
      for (const auto& s : nes) {
        worst = std::max(worst, social_cost(s).value());
        trees = trees && build_comm_graph(s).graph().edge_count() == n - 1;
      }
      CHECK(row.max_cost == worst);
      CHECK(row.opt_cost == optimum_cost(n, a).cost.value());
      CHECK(row.poa == worst / row.opt_cost);
      CHECK(row.all_trees == trees);
      CHECK_FALSE(row.nontree_above_n);
      if (row.all_trees) CHECK(row.poa < Rat(5));
    }
  }
}

TEST_CASE("poa_table: frozen cell n=3 alpha=3") {
  auto rows = poa_table({3}, {Rat(3)});
  REQUIRE(rows.size() == 1);
  const auto& r = rows[0];
  CHECK(r.ne_classes == 3);
  CHECK(r.max_cost == Rat(14));
  CHECK(r.opt_cost == Rat(14));
  CHECK(r.poa == Rat(1));
  CHECK(r.all_trees);
}
