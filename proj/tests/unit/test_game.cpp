#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "ncg/game.hpp"

using ncg::Cost;
using ncg::Rat;
using ncg::StrategyVector;
using testutil::cycle_profile;
using testutil::path_profile;
using testutil::profile;

TEST_CASE("strategy vector validation") {
  CHECK_THROWS_AS(StrategyVector::create(0, Rat(1), {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StrategyVector::create(2, Rat(1), {{1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StrategyVector::create(2, Rat(1), {{1, 1}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StrategyVector::create(2, Rat(1), {{0}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StrategyVector::create(2, Rat(1), {{2}, {}}),
                  std::invalid_argument);

  StrategyVector s = StrategyVector::create(3, Rat(1), {{2, 1}, {}, {}});
  CHECK(s.strategies[0] == std::vector<int>{1, 2});  // sorted on entry
  CHECK(s.buys(0, 2));
  CHECK(!s.buys(2, 0));
}

TEST_CASE("communication graph and ownership") {
  auto s = profile(3, Rat(1), {{0, 1}, {1, 0}, {1, 2}});  // (0,1) bought twice
  auto og = ncg::build_comm_graph(s);
  CHECK(og.graph().edge_count() == 2);
  CHECK(og.double_bought(0, 1));
  CHECK(og.double_bought(1, 0));
  CHECK(!og.double_bought(1, 2));
  CHECK(og.buys(1, 2));
  CHECK(!og.buys(2, 1));
  CHECK(og.bought_degree(1) == 2);
}

TEST_CASE("player costs on a path") {
  auto s = path_profile(3, Rat(3));
  auto c0 = ncg::player_cost(s, 0);
  CHECK(c0.link_cost == Cost(Rat(3)));
  CHECK(c0.distance_cost == Cost(Rat(3)));
  CHECK(c0.total == Cost(Rat(6)));
  CHECK(ncg::player_cost(s, 1).total == Cost(Rat(5)));
  CHECK(ncg::player_cost(s, 2).total == Cost(Rat(3)));
  CHECK(ncg::social_cost(s) == Cost(Rat(14)));
}

TEST_CASE("player costs on star and cycle") {
  // Star with leaf-owned spokes.
  auto star = profile(4, Rat(2), {{1, 0}, {2, 0}, {3, 0}});
  CHECK(ncg::player_cost(star, 1).total == Cost(Rat(7)));
  CHECK(ncg::player_cost(star, 0).total == Cost(Rat(3)));

  auto c5 = cycle_profile(5, Rat(1));
  for (int u = 0; u < 5; ++u)
    CHECK(ncg::player_cost(c5, u).total == Cost(Rat(7)));
  CHECK(ncg::social_cost(c5) == Cost(Rat(35)));
}

TEST_CASE("double purchases are billed to both buyers") {
  auto s = profile(2, Rat(1), {{0, 1}, {1, 0}});
  CHECK(ncg::player_cost(s, 0).total == Cost(Rat(2)));
  CHECK(ncg::player_cost(s, 1).total == Cost(Rat(2)));
  CHECK(ncg::social_cost(s) == Cost(Rat(4)));
}

TEST_CASE("disconnected profiles cost infinity") {
  auto s = profile(3, Rat(1), {{0, 1}});
  CHECK(ncg::player_cost(s, 0).total.is_pos_inf());
  CHECK(ncg::social_cost(s).is_pos_inf());
}

TEST_CASE("optimum matches the exhaustive oracle") {
  std::vector<Rat> alphas = {Rat(1, 2), Rat(1),  Rat(2),
                             Rat(3),    Rat(10), Rat(100)};
  for (int n = 2; n <= 5; ++n) {
    for (const Rat& a : alphas) {
      auto got = ncg::optimum_cost(n, a);
      CHECK(got.certified);
      CHECK(got.cost == Cost(testutil::oracle_optimum(n, a)));
    }
  }
}

TEST_CASE("optimum frozen values") {
  CHECK(ncg::optimum_cost(3, Rat(1)).cost == Cost(Rat(9)));
  CHECK(ncg::optimum_cost(3, Rat(3)).cost == Cost(Rat(14)));
  CHECK(ncg::optimum_cost(5, Rat(10)).cost == Cost(Rat(72)));
  CHECK(ncg::optimum_cost(1, Rat(7)).cost == Cost(Rat(0)));
  CHECK_THROWS_AS(ncg::optimum_cost(3, Rat(0)), std::invalid_argument);
}

TEST_CASE("optimum above the exhaustive range is a candidate bound") {
  auto r = ncg::optimum_cost(9, Rat(2));
  CHECK(!r.certified);
  CHECK(r.cost.finite());
}

TEST_CASE("price of anarchy helper") {
  auto path = path_profile(3, Rat(3));
  CHECK(ncg::poa({path}, 3, Rat(3)) == Rat(1));
  CHECK_THROWS_AS(ncg::poa({}, 3, Rat(3)), std::invalid_argument);
  CHECK_THROWS_AS(ncg::poa({path}, 4, Rat(3)), std::invalid_argument);
  auto lonely = profile(3, Rat(3), {{0, 1}});
  CHECK_THROWS_AS(ncg::poa({lonely}, 3, Rat(3)), std::invalid_argument);
}
