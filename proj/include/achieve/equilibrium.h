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

#ifndef ACHIEVE_EQUILIBRIUM_H_
#define ACHIEVE_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "achieve/game.h"
#include "achieve/rational.h"

namespace achieve {

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;
inline constexpr std::uint64_t kDefaultIesdsCap = 1'000'000;

// Choice indices of all agents toward one goal.
using GoalColumn = std::vector<int>;
// Choice indices of one agent toward all goals.
using Strategy = std::vector<int>;

// Pure Nash equilibria of a game, stored per goal. Utilities are additive
// over goals and a unilateral deviation on one goal never changes another
// goal's outcome, so the full equilibrium set is the Cartesian product of
// the per-goal sets.
struct EquilibriumSet {
  std::vector<std::vector<GoalColumn>> per_goal;
  // Fraction of the columns in each per-goal set that achieve the goal;
  // empty when that set is empty.
  std::vector<std::optional<Rational>> achieved_fraction;

  std::vector<std::uint64_t> Counts() const;
  bool HasEmptyGoal() const;
  // Product of the per-goal counts, saturating at UINT64_MAX.
  std::uint64_t TotalCount() const;
  // Materializes the product in lexicographic profile order. Throws
  // CapExceeded if it holds more than `cap` profiles.
  std::vector<ContributionProfile> Profiles(
      std::uint64_t cap = kDefaultBruteForceCap) const;
};

// Count and number of achieving columns of one per-goal equilibrium set.
struct GoalSummary {
  std::uint64_t count = 0;
  std::uint64_t achieved = 0;
};

// All columns (in lexicographic order) where no agent can strictly raise its
// term -d + w_ij [sum >= g_j] by changing its own entry.
std::vector<GoalColumn> SingleGoalEquilibria(const Game& game, int goal);
// Same enumeration as SingleGoalEquilibria without storing the columns.
GoalSummary SummarizeGoal(const Game& game, int goal);

EquilibriumSet Equilibria(const Game& game);

// Nash check using single-entry deviations.
bool IsEquilibrium(const Game& game, const ContributionProfile& profile);

// Exhaustive scan of all K^(MN) profiles, testing every whole-row deviation
// of every agent with exact rational utilities. Independent of the per-goal
// decomposition and kept as its cross-check. Lexicographic order.
std::vector<ContributionProfile> BruteForceEquilibria(
    const Game& game, std::uint64_t cap = kDefaultBruteForceCap);

// Strategy index <-> M-tuple of choice indices (goal 0 most significant).
Strategy DecodeStrategy(std::uint64_t index, int num_costs, int num_goals);
std::uint64_t StrategyCount(int num_costs, int num_goals);

enum class EliminationOrder {
  // Each round removes every strategy that is dominated at the round start.
  kSimultaneous,
  // Removes one dominated strategy at a time (lowest agent, then lowest
  // strategy index) and re-evaluates.
  kOneAtATime,
};

struct SurvivorSets {
  // Surviving strategies per agent, in lexicographic order.
  std::vector<std::vector<Strategy>> per_agent;
  int rounds = 0;
};

// Iterated elimination of strictly dominated pure strategies. Dominance is
// tested against every combination of the opponents' surviving strategies.
// Throws CapExceeded if N * (K^M)^2 strategy pairs exceed `cap`.
SurvivorSets Iesds(const Game& game,
                   EliminationOrder order = EliminationOrder::kSimultaneous,
                   std::uint64_t cap = kDefaultIesdsCap);

struct TheoremReport {
  // Extreme, even individual purpose game with c_1 = 0 and c_K = g.
  bool applicable = false;
  bool unique_equilibrium = false;
  // d_ii = g_i and d_ij = 0 otherwise.
  bool equilibrium_is_diagonal = false;
  // Every equilibrium achieves every goal (and at least one exists).
  bool all_goals_achieved = false;
  std::uint64_t equilibrium_count = 0;
  // Set when the equilibrium is unique.
  std::optional<ContributionProfile> equilibrium;
};

// Checks that an extreme even individual purpose game has exactly one pure
// equilibrium, the diagonal one, and that it achieves every goal. For other
// games the flags describe whatever the enumeration finds.
TheoremReport VerifyImportanceOfBeingDifferent(const Game& game);

}  // namespace achieve

#endif  // ACHIEVE_EQUILIBRIUM_H_
