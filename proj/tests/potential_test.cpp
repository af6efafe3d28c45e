#include "coalab/potential.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "coalab/rng.hpp"
#include "oracles.hpp"

namespace {

using namespace coalab;

constexpr double kTol = 1e-9;

TUGame g1() { return make_game(2, {{1, 1.0}, {2, 2.0}, {3, 4.0}}); }
CFPD p1() { return make_cfpd(2, {{1, 0.2}, {2, 0.3}, {3, 0.5}}); }
ProbGame fixture() { return ProbGame(g1(), p1()); }

TEST(ProbPotentialTest, FixtureValue) {
  EXPECT_NEAR(oracle::prob_potential(fixture()), 2.55, kTol);
  const ProbPotentialTable table = prob_potential(fixture());
  EXPECT_NEAR(table.at(0b11), 2.55, kTol);  // 0.2*1 + 0.3*2 + 0.5*3.5
  EXPECT_NEAR(table.at(0b01), 0.7, kTol);   // projected mass 0.7 on {0}
  EXPECT_NEAR(table.at(0b10), 1.6, kTol);   // projected mass 0.8 on {1}
}

TEST(ProbPotentialTest, PointMassGivesClassicalPotential) {
  Rng rng(31);
  for (int trial = 0; trial < 16; ++trial) {
    const int n = trial % 6 + 1;
    const TUGame g = random_game(rng, n);
    const ProbPotentialTable table =
        prob_potential(ProbGame(g, point_mass(n, full_coalition(n))));
    const std::vector<double> classical = potential_table(g);
    for (Coalition t = 1; t < table.value.size(); ++t) {
      EXPECT_NEAR(table.at(t), classical[t], kTol);
    }
  }
}

TEST(ProbPotentialTest, NullGameIsZero) {
  const ProbPotentialTable table = prob_potential(ProbGame(null_game(3), uniform_cfpd(3)));
  for (double x : table.value) EXPECT_NEAR(x, 0.0, kTol);
}

TEST(ProbPotentialTest, RecursionMatchesExplicitSum) {
  Rng rng(32);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = trial % 6 + 1;
    const CFPD d = trial % 2 ? random_simplex_cfpd(rng, n) : random_partial_cfpd(rng, n);
    const ProbGame pg(random_game(rng, n), d);
    const ProbPotentialTable a = prob_potential(pg);
    const ProbPotentialTable b = prob_potential_recursive(pg);
    for (Coalition t = 0; t < a.value.size(); ++t) {
      EXPECT_NEAR(a.at(t), b.at(t), kTol);
    }
  }
}

TEST(ProbPotentialTest, DerivativeFixture) {
  // 2.55 - 0.8 * P({1}) = 2.55 - 1.6
  EXPECT_NEAR(prob_potential_derivative(fixture(), 0), 0.95, kTol);
  EXPECT_NEAR(prob_potential_derivative(fixture(), 1), 1.85, kTol);
  EXPECT_THROW(prob_potential_derivative(fixture(), 2), std::invalid_argument);
}

TEST(ProbPotentialTest, DerivativeVectorIsExpectedShapley) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = trial % 5 + 1;
    const CFPD d = trial % 2 ? random_simplex_cfpd(rng, n) : random_partial_cfpd(rng, n);
    const ProbGame pg(random_game(rng, n), d);
    const PayoffVector expsh = expected_shapley(pg);
    for (PlayerId i = 0; i < n; ++i) {
      EXPECT_NEAR(prob_potential_derivative(pg, i), expsh[i], kTol);
    }
  }
}

TEST(ProbReducedGameTest, FixtureWorthAndDistribution) {
  const ProbGame reduced = prob_reduced_game_shapley(fixture(), singleton(0));
  EXPECT_EQ(reduced.num_players(), 1);
  // 1 * (0.7/0.7) + 0.5 * (0.5/0.7)
  EXPECT_NEAR(reduced.game.worth(1), 1.3571428571428572, kTol);
  EXPECT_NEAR(reduced.dist.prob(0), 0.3, kTol);
  EXPECT_NEAR(reduced.dist.prob(1), 0.7, kTol);

  // the generic value-dividend route agrees for the Shapley operator
  const ProbGame generic = prob_reduced_game(fixture(), singleton(0), shapley_operator());
  EXPECT_NEAR(generic.game.worth(1), reduced.game.worth(1), kTol);
}

TEST(ProbReducedGameTest, GenericRouteMatchesShapleySpecialization) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = trial % 3 + 2;
    const CFPD d = trial % 2 ? random_simplex_cfpd(rng, n) : random_partial_cfpd(rng, n);
    const ProbGame pg(random_game(rng, n), d);
    for (Coalition t = 1; t < pg.grand_coalition(); ++t) {
      const ProbGame a = prob_reduced_game_shapley(pg, t);
      const ProbGame b = prob_reduced_game(pg, t, shapley_operator());
      for (Coalition s = 0; s < a.game.table_size(); ++s) {
        EXPECT_NEAR(a.game.worth(s), b.game.worth(s), kTol);
      }
      EXPECT_EQ(a.dist, b.dist);
    }
  }
}

TEST(ProbReducedGameTest, PointMassCollapsesToClassicalReduction) {
  Rng rng(35);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial % 4 + 2;
    const TUGame g = random_game(rng, n);
    const ProbGame pg(g, point_mass(n, full_coalition(n)));
    for (Coalition t = 1; t < g.grand_coalition(); ++t) {
      const ProbGame reduced = prob_reduced_game_shapley(pg, t);
      const TUGame classical = reduced_game(g, t, shapley_operator(), ReducedForm::kDividend);
      for (Coalition s = 0; s < classical.table_size(); ++s) {
        EXPECT_NEAR(reduced.game.worth(s), classical.worth(s), kTol);
      }
    }
  }
}

TEST(ProbReducedGameTest, NullGameStaysNull) {
  const ProbGame reduced =
      prob_reduced_game_shapley(ProbGame(null_game(3), uniform_cfpd(3)), 0b011);
  for (Coalition s = 0; s < reduced.game.table_size(); ++s) {
    EXPECT_NEAR(reduced.game.worth(s), 0.0, kTol);
  }
}

TEST(ProbReducedGameTest, RejectsEmptyAndGrandSubsets) {
  EXPECT_THROW(prob_reduced_game_shapley(fixture(), 0), std::invalid_argument);
  EXPECT_THROW(prob_reduced_game_shapley(fixture(), 0b11), std::invalid_argument);
}

TEST(SupersetMassMonotonicityTest, HoldsOnRandomDistributions) {
  Rng rng(36);
  for (int trial = 0; trial < 24; ++trial) {
    const int n = trial % 6 + 1;
    const CFPD d = trial % 2 ? random_simplex_cfpd(rng, n) : random_partial_cfpd(rng, n);
    const std::vector<double> q = superset_mass(d);
    for (Coalition k1 = 0; k1 < d.table_size(); ++k1) {
      const Coalition rest = full_coalition(n) & ~k1;
      for_each_subset(rest, [&](Coalition k2) {
        EXPECT_GE(q[k1] - q[k1 | k2], -kTol);
      });
    }
  }
}

TEST(PconTest, ExpectedShapleyPassesOnFixture) {
  const PconReport report = check_pcon(fixture(), expected_shapley_operator());
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.checks_run, 2);  // T={0} and T={1}, one member each
}

TEST(PconTest, ExpectedShapleyPassesOnRandomInstances) {
  Rng rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial % 5 + 2;
    const CFPD d = trial % 2 ? random_simplex_cfpd(rng, n) : random_partial_cfpd(rng, n);
    const ProbGame pg(random_game(rng, n), d);
    EXPECT_TRUE(check_pcon(pg, expected_shapley_operator()).pass());
  }
}

TEST(PconTest, ScaledValuePassesOtherValuesFail) {
  // k * ExpSh inherits p-CON from the Expected Shapley value.
  const ProbValueOperator scaled = [](const ProbGame& pg) {
    PayoffVector out = expected_shapley(pg);
    for (double& x : out) x *= 2.0;
    return out;
  };
  EXPECT_TRUE(check_pcon(fixture(), scaled).pass());

  // equal split of the expected worth is not p-consistent:
  // at T={0} the reduced game pays 0.95 against E/2 = 1.4.
  const ProbValueOperator equal_split = [](const ProbGame& pg) {
    return PayoffVector(pg.num_players(), expected_worth(pg) / pg.num_players());
  };
  const PconReport report = check_pcon(fixture(), equal_split);
  ASSERT_FALSE(report.pass());
  EXPECT_NEAR(report.violations.front().gap, 1.4 - 0.95, kTol);

  // the piecewise value that is standard for two players breaks on |N| = 3
  const ProbValueOperator piecewise = [](const ProbGame& pg) {
    if (pg.num_players() <= 2) return expected_shapley(pg);
    const double share =
        pg.game.worth(pg.grand_coalition()) * pg.dist.prob(pg.grand_coalition()) /
        pg.num_players();
    return PayoffVector(pg.num_players(), share);
  };
  Rng rng(38);
  const ProbGame three(random_game(rng, 3), random_simplex_cfpd(rng, 3));
  EXPECT_FALSE(check_pcon(three, piecewise).pass());
}

TEST(PconTest, RequiresTwoPlayers) {
  const ProbGame tiny(make_game(1, {{1, 2.0}}), point_mass(1, 1));
  EXPECT_THROW(check_pcon(tiny, expected_shapley_operator()), std::invalid_argument);
}

TEST(StppgTest, FixtureReference) {
  // E(p_{-2}) + p(N)(v(N)-v(1)-v(2))/2 = 0.7 + 0.25
  EXPECT_NEAR(stppg_reference(fixture(), 0), 0.95, kTol);
  EXPECT_NEAR(stppg_reference(fixture(), 1), 1.85, kTol);
  const ProbGame three(null_game(3), uniform_cfpd(3));
  EXPECT_THROW(stppg_reference(three, 0), std::invalid_argument);
}

TEST(StppgTest, ExpectedShapleyPassesEqualSplitFails) {
  const StppgReport good = check_stppg(expected_shapley_operator());
  EXPECT_TRUE(good.pass());
  EXPECT_EQ(good.checks_run, 200);  // 100 instances, both players

  const ProbValueOperator equal_split = [](const ProbGame& pg) {
    return PayoffVector(pg.num_players(), expected_worth(pg) / pg.num_players());
  };
  EXPECT_FALSE(check_stppg(equal_split).pass());
  // the fixture already witnesses the violation: 1.4 against 0.95
  EXPECT_NEAR(expected_worth(fixture()) / 2, 1.4, kTol);
}

TEST(StppgTest, SeedChangesInstances) {
  const StppgReport a = check_stppg(expected_shapley_operator(), 7, 10);
  const StppgReport b = check_stppg(expected_shapley_operator(), 8, 10);
  EXPECT_TRUE(a.pass());
  EXPECT_TRUE(b.pass());
  EXPECT_EQ(a.checks_run, 20);
}

}  // namespace
