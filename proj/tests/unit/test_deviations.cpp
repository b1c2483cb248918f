#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "ncg/deviations.hpp"

using ncg::Cost;
using ncg::Deviation;
using ncg::DeviationKind;
using ncg::Rat;
using ncg::StrategyVector;
using ncg::VerifyMode;
using testutil::cycle_profile;
using testutil::path_profile;
using testutil::profile;

namespace {

StrategyVector random_profile(std::mt19937& rng, int n, const Rat& alpha,
                              double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<int>> strategies(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < p) strategies[u].push_back(v);
  return StrategyVector::create(n, alpha, std::move(strategies));
}

}  // namespace

TEST_CASE("cost delta for simple deviations") {
  auto s = path_profile(3, Rat(3));
  // Player 2 buys an edge that already exists: pays for nothing.
  CHECK(ncg::cost_delta(s, {2, {1}, DeviationKind::AddOne}) == Cost(Rat(3)));
  // Player 0 drops its only edge and goes dark.
  CHECK(ncg::cost_delta(s, {0, {}, DeviationKind::DropOne}).is_pos_inf());
  // Player 1 abandoning (1,2) disconnects player 1 from 2 as well.
  CHECK(ncg::cost_delta(s, {1, {}, DeviationKind::DropOne}).is_pos_inf());

  auto lonely = profile(3, Rat(3), {{0, 1}});
  CHECK(ncg::cost_delta(lonely, {2, {0}, DeviationKind::AddOne}).is_neg_inf());
}

TEST_CASE("triangle refutation witness") {
  auto tri = cycle_profile(3, Rat(3));
  auto v = ncg::is_nash(tri, VerifyMode::Exact);
  CHECK(!v.is_equilibrium);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness_delta == Cost(Rat(-2)));
  CHECK(ncg::describe(*v.witness, tri, v.witness_delta) ==
        "player 0 drop {1}: delta -2");
  CHECK(ncg::cost_delta(tri, *v.witness) == v.witness_delta);
}

TEST_CASE("equilibrium certification") {
  CHECK(ncg::is_nash(path_profile(3, Rat(3)), VerifyMode::Exact)
            .is_equilibrium);
  CHECK(ncg::is_nash(cycle_profile(3, Rat(1, 2)), VerifyMode::Exact)
            .is_equilibrium);
}

TEST_CASE("best response") {
  auto s = profile(3, Rat(3), {{1, 2}});  // edge 1-2, player 0 isolated
  auto br = ncg::best_response(s, 0);
  CHECK(br.cost == Cost(Rat(6)));
  CHECK(br.strategy == std::vector<int>{1});  // ties break lexicographically

  auto ne = path_profile(3, Rat(3));
  auto keep = ncg::best_response(ne, 0);
  CHECK(keep.cost == ncg::player_cost(ne, 0).total);
}

TEST_CASE("exhaustive limit is enforced") {
  auto s = path_profile(5, Rat(1));
  CHECK_THROWS_AS(ncg::is_nash(s, VerifyMode::Exact, 4),
                  ncg::ExhaustiveLimitError);
  CHECK_THROWS_AS(ncg::best_response(s, 0, 4), ncg::ExhaustiveLimitError);
  CHECK_NOTHROW(ncg::is_nash(s, VerifyMode::FamilyRestricted, 4));
}

TEST_CASE("family deviations cover the named moves") {
  auto c5 = cycle_profile(5, Rat(1));
  auto devs = ncg::family_deviations(c5, 0);
  bool has_drop = false, has_add = false, has_swap = false, has_two = false;
  for (const auto& d : devs) {
    CHECK(d.player == 0);
    if (d.kind == DeviationKind::DropOne) has_drop = true;
    if (d.kind == DeviationKind::AddOne) has_add = true;
    if (d.kind == DeviationKind::SwapOne) has_swap = true;
    if (d.kind == DeviationKind::TwoSwap) {
      has_two = true;
      // 0 owns (0,1); node 1 is a 2-node, so the rewire target is 2.
      CHECK(d.new_strategy == std::vector<int>{2});
    }
  }
  CHECK(has_drop);
  CHECK(has_add);
  CHECK(has_swap);
  CHECK(has_two);
}

TEST_CASE("exact verdicts match the brute-force oracle") {
  std::mt19937 rng(123457);
  std::vector<Rat> alphas = {Rat(1, 2), Rat(1), Rat(2), Rat(3), Rat(17)};
  int refuted = 0, certified = 0;
  for (int t = 0; t < 250; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    Rat a = alphas[rng() % alphas.size()];
    auto s = random_profile(rng, n, a, 0.35);
    auto v = ncg::is_nash(s, VerifyMode::Exact);
    CHECK(v.is_equilibrium == testutil::oracle_is_ne(s));
    if (v.is_equilibrium) {
      ++certified;
      CHECK(!v.witness.has_value());
    } else {
      ++refuted;
      REQUIRE(v.witness.has_value());
      Cost d = ncg::cost_delta(s, *v.witness);
      CHECK(d == v.witness_delta);
      CHECK(d < Cost(Rat(0)));
    }
  }
  CHECK(refuted > 0);
  CHECK(certified > 0);
}

TEST_CASE("family refutations are sound") {
  std::mt19937 rng(5150);
  for (int t = 0; t < 150; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto s = random_profile(rng, n, Rat(1 + static_cast<int>(rng() % 5)), 0.4);
    auto fam = ncg::is_nash(s, VerifyMode::FamilyRestricted);
    auto exact = ncg::is_nash(s, VerifyMode::Exact);
    if (!fam.is_equilibrium) {
      CHECK(!exact.is_equilibrium);
      CHECK(ncg::cost_delta(s, *fam.witness) < Cost(Rat(0)));
    }
    if (exact.is_equilibrium) CHECK(fam.is_equilibrium);
  }
}
