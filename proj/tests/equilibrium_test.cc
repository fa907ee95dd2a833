// Copyright 2026 The Achievement Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "achieve/equilibrium.h"

#include <algorithm>
#include <random>
#include <set>

#include "achieve/random_games.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace achieve {
namespace {

using testing::MakeGame;
using testing::Q;
using testing::Standard;

std::uint64_t Power(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int e = 0; e < exponent; ++e) out *= base;
  return out;
}

ContributionProfile FromRows(std::vector<std::vector<int>> rows) {
  Matrix<int> m(static_cast<int>(rows.size()),
                static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return ContributionProfile(std::move(m));
}

// Every profile of the game, in lexicographic order of its flattened indices.
std::vector<ContributionProfile> AllProfiles(const Game& game) {
  const int n = game.num_agents();
  const int m = game.num_goals();
  const int k = game.costs().size();
  std::vector<ContributionProfile> out;
  const std::uint64_t total = Power(k, n * m);
  for (std::uint64_t code = 0; code < total; ++code) {
    ContributionProfile p(n, m);
    std::uint64_t rest = code;
    for (int cell = n * m - 1; cell >= 0; --cell) {
      p(cell / m, cell % m) = static_cast<int>(rest % k);
      rest /= k;
    }
    out.push_back(p);
  }
  return out;
}

// Whole-row deviation scan written independently of the library.
bool RowDeviationStable(const Game& game, const ContributionProfile& p) {
  const int m = game.num_goals();
  const int k = game.costs().size();
  for (int i = 0; i < game.num_agents(); ++i) {
    const Rational current = Utility(game, p, i);
    for (std::uint64_t s = 0; s < Power(k, m); ++s) {
      ContributionProfile q = p;
      std::uint64_t rest = s;
      for (int j = 0; j < m; ++j) {
        q(i, j) = static_cast<int>(rest % k);
        rest /= k;
      }
      if (Utility(game, q, i) > current) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Per-goal enumeration.

TEST(SingleGoalTest, OpposedPair) {
  const Game ab = Standard("AB");
  EXPECT_EQ(SingleGoalEquilibria(ab, 0), (std::vector<GoalColumn>{{2, 0}}));
  EXPECT_EQ(SingleGoalEquilibria(ab, 1), (std::vector<GoalColumn>{{0, 2}}));
  EXPECT_THROW(SingleGoalEquilibria(ab, 2), InvalidArgument);
  EXPECT_THROW(SingleGoalEquilibria(ab, -1), InvalidArgument);
}

TEST(SingleGoalTest, CentristPair) {
  EXPECT_EQ(SingleGoalEquilibria(Standard("OO"), 0),
            (std::vector<GoalColumn>{{0, 0}, {1, 1}}));
}

TEST(SingleGoalTest, ThreeAlikeAgents) {
  const auto columns = SingleGoalEquilibria(Standard("AAA"), 0);
  ASSERT_EQ(columns.size(), 8u);
  int permutations = 0;
  for (const auto& c : columns) {
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<int>{0, 1, 2}) ++permutations;
  }
  EXPECT_EQ(permutations, 6);
  EXPECT_NE(std::find(columns.begin(), columns.end(), GoalColumn{1, 1, 1}),
            columns.end());
  EXPECT_NE(std::find(columns.begin(), columns.end(), GoalColumn{0, 0, 0}),
            columns.end());
  EXPECT_TRUE(std::is_sorted(columns.begin(), columns.end()));
  const GoalSummary summary = SummarizeGoal(Standard("AAA"), 0);
  EXPECT_EQ(summary.count, 8u);
  EXPECT_EQ(summary.achieved, 7u);
}

TEST(EquilibriaTest, Examples) {
  const EquilibriumSet ab = Equilibria(Standard("AB"));
  EXPECT_EQ(ab.Counts(), (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(ab.TotalCount(), 1u);
  EXPECT_EQ(ab.achieved_fraction[0], Q(1));
  EXPECT_EQ(ab.achieved_fraction[1], Q(1));

  const EquilibriumSet oo = Equilibria(Standard("OO"));
  EXPECT_EQ(oo.Counts(), (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(oo.TotalCount(), 4u);
  EXPECT_EQ(oo.achieved_fraction[0], Q(1, 2));

  const EquilibriumSet aaaa = Equilibria(Standard("AAAA"));
  EXPECT_EQ(aaaa.Counts(), (std::vector<std::uint64_t>{20, 1}));
  EXPECT_EQ(aaaa.achieved_fraction[0], Q(19, 20));
  EXPECT_EQ(aaaa.achieved_fraction[1], Q(0));
  EXPECT_FALSE(aaaa.HasEmptyGoal());
}

TEST(EquilibriaTest, EmptyGoalHasNoFraction) {
  // A lone agent with w < 0 stays at 0 and misses the goal.
  const Game loner = MakeGame({Q(0), Q(1)}, {Q(1)}, {{Q(-1)}});
  const EquilibriumSet set = Equilibria(loner);
  EXPECT_EQ(set.Counts(), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(set.achieved_fraction[0], Q(0));

  // Hand-built empty goal set: the fraction is absent and the product empty.
  EquilibriumSet empty;
  empty.per_goal = {{}, {{0}}};
  empty.achieved_fraction = {std::nullopt, Q(1)};
  EXPECT_TRUE(empty.HasEmptyGoal());
  EXPECT_EQ(empty.TotalCount(), 0u);
  EXPECT_TRUE(empty.Profiles().empty());
}

TEST(IsEquilibriumTest, Examples) {
  const Game ab = Standard("AB");
  EXPECT_TRUE(IsEquilibrium(ab, FromRows({{2, 0}, {0, 2}})));
  EXPECT_FALSE(IsEquilibrium(ab, ContributionProfile(2, 2)));
  EXPECT_TRUE(IsEquilibrium(Standard("OO"), ContributionProfile(2, 2)));
  EXPECT_THROW(IsEquilibrium(ab, ContributionProfile(3, 2)), InvalidArgument);
}

TEST(BruteForceTest, Examples) {
  const auto ab = BruteForceEquilibria(Standard("AB"));
  ASSERT_EQ(ab.size(), 1u);
  EXPECT_EQ(ab[0], FromRows({{2, 0}, {0, 2}}));
  EXPECT_EQ(BruteForceEquilibria(Standard("OO")).size(), 4u);

  const Game solo = MakeGame({Q(0), Q(3, 2)}, {Q(3, 2)}, {{Q(2)}});
  const auto only = BruteForceEquilibria(solo);
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0](0, 0), 1);
}

TEST(BruteForceTest, CapIsEnforced) {
  EXPECT_THROW(BruteForceEquilibria(Standard("AAAA"), 1000), CapExceeded);
  EXPECT_NO_THROW(BruteForceEquilibria(Standard("AB"), 81));
}

// ---------------------------------------------------------------------------
// Dominance elimination.

TEST(IesdsTest, SingleAgentKeepsOnlyExactPayment) {
  const Game g = MakeGame({Q(0), Q(1), Q(2)}, {Q(1)}, {{Q(9, 4)}});
  const SurvivorSets s = Iesds(g);
  ASSERT_EQ(s.per_agent.size(), 1u);
  EXPECT_EQ(s.per_agent[0], (std::vector<Strategy>{{1}}));
}

TEST(IesdsTest, OpposedPairIsSolvable) {
  const SurvivorSets s = Iesds(Standard("AB"));
  EXPECT_EQ(s.per_agent[0], (std::vector<Strategy>{{2, 0}}));
  EXPECT_EQ(s.per_agent[1], (std::vector<Strategy>{{0, 2}}));
}

TEST(IesdsTest, CentristPairIsNotSolvable) {
  const SurvivorSets s = Iesds(Standard("OO"));
  for (const auto& survivors : s.per_agent) {
    EXPECT_GE(survivors.size(), 2u);
  }
}

TEST(IesdsTest, CapIsEnforced) {
  EXPECT_THROW(Iesds(Standard("AB"), EliminationOrder::kSimultaneous, 10),
               CapExceeded);
}

// ---------------------------------------------------------------------------
// Theorem check.

TEST(TheoremTest, OpposedPair) {
  const TheoremReport r = VerifyImportanceOfBeingDifferent(Standard("AB"));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.unique_equilibrium);
  EXPECT_TRUE(r.equilibrium_is_diagonal);
  EXPECT_TRUE(r.all_goals_achieved);
  EXPECT_EQ(r.equilibrium_count, 1u);
  ASSERT_TRUE(r.equilibrium.has_value());
  EXPECT_EQ(*r.equilibrium, FromRows({{2, 0}, {0, 2}}));
}

TEST(TheoremTest, ThreeSpecialists) {
  const Game g = Standard("200-020-002", 3);
  const TheoremReport r = VerifyImportanceOfBeingDifferent(g);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.unique_equilibrium);
  EXPECT_TRUE(r.equilibrium_is_diagonal);
  EXPECT_TRUE(r.all_goals_achieved);
  const auto brute = BruteForceEquilibria(g);
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(brute[0], *r.equilibrium);
}

TEST(TheoremTest, CentristPairNotApplicable) {
  const TheoremReport r = VerifyImportanceOfBeingDifferent(Standard("OO"));
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.unique_equilibrium);
  EXPECT_EQ(r.equilibrium_count, 4u);
}

TEST(TheoremTest, TopCostMustEqualThreshold) {
  // Extreme and even, but c_K = 2 exceeds g = 1.
  const Game g = MakeGame({Q(0), Q(1, 2), Q(2)}, {Q(1), Q(1)},
                          {{Q(2), Q(0)}, {Q(0), Q(2)}});
  EXPECT_FALSE(VerifyImportanceOfBeingDifferent(g).applicable);
}

// ---------------------------------------------------------------------------
// Properties.

// Product decomposition agrees with the brute-force oracle on standard games.
TEST(EquilibriumProperty, DecompositionMatchesOracleOnStandardGames) {
  const std::vector<std::string> labels = {
      "A", "O", "B", "AA", "AO", "AB", "OO", "OB", "BB",
      "AAA", "AAO", "AAB", "AOO", "AOB", "ABB", "OOO", "OOB", "OBB", "BBB"};
  for (const auto& label : labels) {
    const Game g = Standard(label);
    EXPECT_EQ(Equilibria(g).Profiles(), BruteForceEquilibria(g)) << label;
  }
  for (const std::string label : {"2", "1", "0", "2-2", "1-2", "0-1-2",
                                  "1-1-1", "0-0-2"}) {
    const Game g = Standard(label, 1);
    EXPECT_EQ(Equilibria(g).Profiles(), BruteForceEquilibria(g)) << label;
  }
}

// ... and on random games with arbitrary rational parameters.
TEST(EquilibriumProperty, DecompositionMatchesOracleOnRandomGames) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const Game g = testing::RandomSmallGame(rng);
    const EquilibriumSet set = Equilibria(g);
    const auto brute = BruteForceEquilibria(g);
    EXPECT_EQ(set.Profiles(), brute) << "trial " << t;
    EXPECT_EQ(set.TotalCount(), brute.size());
    EXPECT_LE(brute.size(),
              Power(g.costs().size(), g.num_agents() * g.num_goals()));
  }
}

// Single-entry and whole-row deviation checks agree on every profile.
TEST(EquilibriumProperty, DeviationEquivalence) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const Game g = testing::RandomSmallGame(rng, 2, 3);
    for (const auto& p : AllProfiles(g)) {
      ASSERT_EQ(IsEquilibrium(g, p), RowDeviationStable(g, p));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

bool Contains(const std::vector<Strategy>& set, const Strategy& s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// Equilibria survive elimination and both elimination orders agree.
TEST(EquilibriumProperty, IesdsSoundAndOrderIndependent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const Game g = testing::RandomSmallGame(rng);
    const SurvivorSets a = Iesds(g, EliminationOrder::kSimultaneous);
    const SurvivorSets b = Iesds(g, EliminationOrder::kOneAtATime);
    ASSERT_EQ(a.per_agent, b.per_agent) << "trial " << t;
    for (const auto& survivors : a.per_agent) EXPECT_FALSE(survivors.empty());
    for (const auto& p : BruteForceEquilibria(g)) {
      for (int i = 0; i < g.num_agents(); ++i) {
        const auto row = p.choices().row(i);
        EXPECT_TRUE(Contains(a.per_agent[i], Strategy(row.begin(), row.end())))
            << "trial " << t;
      }
    }
  }
}

// No survivor overpays a goal when a cheaper choice already reaches it.
TEST(EquilibriumProperty, OverThresholdContributionsEliminated) {
  std::mt19937_64 rng(13);
  int instances = 0;
  for (int t = 0; t < 300; ++t) {
    const Game g = testing::RandomSmallGame(rng);
    const SurvivorSets s = Iesds(g);
    const CostSet& c = g.costs();
    for (int j = 0; j < g.num_goals(); ++j) {
      for (int k = 0; k < c.size(); ++k) {
        bool dominated = false;
        for (int cheaper = 0; cheaper < k; ++cheaper) {
          dominated = dominated ||
                      (c[k] > g.threshold(j) && c[cheaper] >= g.threshold(j));
        }
        if (!dominated) continue;
        ++instances;
        for (const auto& survivors : s.per_agent) {
          for (const auto& strategy : survivors) {
            EXPECT_NE(strategy[j], k) << "trial " << t;
          }
        }
      }
    }
  }
  EXPECT_GT(instances, 20);
}

// Hypotheses imply a unique diagonal all-achieving equilibrium.
TEST(EquilibriumProperty, TheoremOnRandomApplicableGames) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(UniformIndex(rng, 3));
    const Game g = testing::RandomApplicableGame(rng, n);
    const TheoremReport r = VerifyImportanceOfBeingDifferent(g);
    ASSERT_TRUE(r.applicable) << "trial " << t;
    EXPECT_TRUE(r.unique_equilibrium);
    EXPECT_TRUE(r.equilibrium_is_diagonal);
    EXPECT_TRUE(r.all_goals_achieved);
    if (n <= 3) EXPECT_EQ(BruteForceEquilibria(g).size(), 1u);
  }
}

TEST(EquilibriumProperty, CliGeneratorSatisfiesHypotheses) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 30; ++t) {
      const Game g = RandomTheoremGame(n, rng);
      EXPECT_TRUE(VerifyImportanceOfBeingDifferent(g).applicable);
    }
  }
}

TEST(StrategyCodecTest, DecodesLittleEndianDigits) {
  EXPECT_EQ(StrategyCount(3, 2), 9u);
  std::set<Strategy> seen;
  for (std::uint64_t s = 0; s < 9; ++s) seen.insert(DecodeStrategy(s, 3, 2));
  EXPECT_EQ(seen.size(), 9u);
  for (const auto& s : seen) {
    for (int v : s) {
      EXPECT_GE(v, 0);
      EXPECT_LT(v, 3);
    }
  }
}

}  // namespace
}  // namespace achieve
