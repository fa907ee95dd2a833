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
#include <limits>
#include <map>

#include "integer_game.h"

namespace achieve {
namespace {

using internal::IntegerGame;

void CheckGoal(const Game& game, int goal) {
  if (goal < 0 || goal >= game.num_goals()) {
    throw InvalidArgument("goal index " + std::to_string(goal + 1) +
                          " out of range [1, " +
                          std::to_string(game.num_goals()) + "]");
  }
}

// Advances a base-`radix` odometer (last digit fastest); false on wrap.
bool NextDigits(std::vector<int>& digits, int radix) {
  for (int pos = static_cast<int>(digits.size()) - 1; pos >= 0; --pos) {
    if (++digits[pos] < radix) return true;
    digits[pos] = 0;
  }
  return false;
}

std::uint64_t SaturatingPow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

// Calls visit(column, achieved) for every per-goal equilibrium column.
template <typename Visit>
void ForEachGoalEquilibrium(const IntegerGame& ig, int goal, Visit&& visit) {
  const int n = ig.num_agents;
  const int k = ig.num_costs;
  const std::int64_t g = ig.thresholds[goal];
  std::vector<int> column(n, 0);
  do {
    std::int64_t sum = 0;
    for (int c : column) sum += ig.costs[c];
    const bool achieved = sum >= g;

    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const std::int64_t w = ig.motivation(i, goal);
      const std::int64_t own = ig.costs[column[i]];
      const std::int64_t current = -own + (achieved ? w : 0);
      const std::int64_t others = sum - own;
      for (int alt = 0; alt < k; ++alt) {
        if (alt == column[i]) continue;
        const std::int64_t cost = ig.costs[alt];
        const std::int64_t value = -cost + (others + cost >= g ? w : 0);
        if (value > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) visit(column, achieved);
  } while (NextDigits(column, k));
}

}  // namespace

std::vector<std::uint64_t> EquilibriumSet::Counts() const {
  std::vector<std::uint64_t> out;
  out.reserve(per_goal.size());
  for (const auto& e : per_goal) out.push_back(e.size());
  return out;
}

bool EquilibriumSet::HasEmptyGoal() const {
  return std::any_of(per_goal.begin(), per_goal.end(),
                     [](const auto& e) { return e.empty(); });
}

std::uint64_t EquilibriumSet::TotalCount() const {
  std::uint64_t total = 1;
  for (const auto& e : per_goal) {
    if (e.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / e.size()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= e.size();
  }
  return total;
}

std::vector<ContributionProfile> EquilibriumSet::Profiles(
    std::uint64_t cap) const {
  const std::uint64_t total = TotalCount();
  if (total > cap) {
    throw CapExceeded("equilibrium set too large to materialize", total, cap);
  }
  std::vector<ContributionProfile> out;
  if (total == 0) return out;
  const int m = static_cast<int>(per_goal.size());
  const int n = static_cast<int>(per_goal.front().front().size());
  out.reserve(total);
  std::vector<int> pick(m, 0);
  for (;;) {
    ContributionProfile p(n, m);
    for (int j = 0; j < m; ++j) {
      const GoalColumn& col = per_goal[j][pick[j]];
      for (int i = 0; i < n; ++i) p(i, j) = col[i];
    }
    out.push_back(std::move(p));
    int pos = m - 1;
    while (pos >= 0 && ++pick[pos] == static_cast<int>(per_goal[pos].size())) {
      pick[pos--] = 0;
    }
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GoalColumn> SingleGoalEquilibria(const Game& game, int goal) {
  CheckGoal(game, goal);
  IntegerGame ig(game);
  std::vector<GoalColumn> out;
  ForEachGoalEquilibrium(ig, goal, [&](const std::vector<int>& column, bool) {
    out.push_back(column);
  });
  return out;
}

GoalSummary SummarizeGoal(const Game& game, int goal) {
  CheckGoal(game, goal);
  IntegerGame ig(game);
  GoalSummary s;
  ForEachGoalEquilibrium(ig, goal, [&](const std::vector<int>&, bool hit) {
    ++s.count;
    if (hit) ++s.achieved;
  });
  return s;
}

EquilibriumSet Equilibria(const Game& game) {
  IntegerGame ig(game);
  EquilibriumSet set;
  for (int j = 0; j < game.num_goals(); ++j) {
    std::vector<GoalColumn> columns;
    std::int64_t achieved = 0;
    ForEachGoalEquilibrium(ig, j, [&](const std::vector<int>& column, bool hit) {
      columns.push_back(column);
      if (hit) ++achieved;
    });
    if (columns.empty()) {
      set.achieved_fraction.emplace_back(std::nullopt);
    } else {
      set.achieved_fraction.emplace_back(
          Rational(achieved, static_cast<std::int64_t>(columns.size())));
    }
    set.per_goal.push_back(std::move(columns));
  }
  return set;
}

bool IsEquilibrium(const Game& game, const ContributionProfile& profile) {
  profile.Validate(game);
  const CostSet& costs = game.costs();
  for (int j = 0; j < game.num_goals(); ++j) {
    Rational sum;
    for (int i = 0; i < game.num_agents(); ++i) sum += costs[profile(i, j)];
    const Rational& g = game.threshold(j);
    for (int i = 0; i < game.num_agents(); ++i) {
      const Rational& w = game.motivation(i, j);
      const Rational& own = costs[profile(i, j)];
      const Rational current = (sum >= g ? w : Rational(0)) - own;
      for (int alt = 0; alt < costs.size(); ++alt) {
        const Rational moved = sum - own + costs[alt];
        const Rational value = (moved >= g ? w : Rational(0)) - costs[alt];
        if (value > current) return false;
      }
    }
  }
  return true;
}

std::uint64_t StrategyCount(int num_costs, int num_goals) {
  return SaturatingPow(num_costs, num_goals);
}

Strategy DecodeStrategy(std::uint64_t index, int num_costs, int num_goals) {
  Strategy s(num_goals);
  for (int j = num_goals - 1; j >= 0; --j) {
    s[j] = static_cast<int>(index % num_costs);
    index /= num_costs;
  }
  return s;
}

std::vector<ContributionProfile> BruteForceEquilibria(const Game& game,
                                                      std::uint64_t cap) {
  const int n = game.num_agents();
  const int m = game.num_goals();
  const int k = game.costs().size();
  const std::uint64_t total = SaturatingPow(k, m * n);
  if (total > cap) {
    throw CapExceeded("brute-force profile scan too large", total, cap);
  }
  const CostSet& costs = game.costs();
  const std::uint64_t per_agent = StrategyCount(k, m);
  std::vector<Strategy> rows;
  for (std::uint64_t s = 0; s < per_agent; ++s) {
    rows.push_back(DecodeStrategy(s, k, m));
  }

  std::vector<ContributionProfile> out;
  std::vector<int> digits(static_cast<std::size_t>(n) * m, 0);
  std::vector<Rational> sums(m);
  do {
    for (int j = 0; j < m; ++j) {
      sums[j] = Rational(0);
      for (int i = 0; i < n; ++i) sums[j] += costs[digits[i * m + j]];
    }
    // Utility of agent i if it played `row` against everyone else's entries.
    auto utility = [&](int i, std::span<const int> row) {
      Rational u;
      for (int j = 0; j < m; ++j) {
        const Rational total_j = sums[j] - costs[digits[i * m + j]] + costs[row[j]];
        u -= costs[row[j]];
        if (total_j >= game.threshold(j)) u += game.motivation(i, j);
      }
      return u;
    };
    bool stable = true;
    for (int i = 0; i < n && stable; ++i) {
      const Rational current =
          utility(i, std::span<const int>(digits.data() + i * m, m));
      for (const Strategy& row : rows) {
        if (utility(i, row) > current) {
          stable = false;
          break;
        }
      }
    }
    if (stable) {
      ContributionProfile p(n, m);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) p(i, j) = digits[i * m + j];
      }
      out.push_back(std::move(p));
    }
  } while (NextDigits(digits, k));
  return out;
}

// ---------------------------------------------------------------------------
// Iterated elimination of strictly dominated strategies.

namespace {

using SumVector = std::vector<std::int64_t>;

class DominanceSolver {
 public:
  explicit DominanceSolver(const Game& game)
      : ig_(game),
        strategy_count_(StrategyCount(ig_.num_costs, ig_.num_goals)) {
    for (std::uint64_t s = 0; s < strategy_count_; ++s) {
      strategies_.push_back(DecodeStrategy(s, ig_.num_costs, ig_.num_goals));
    }
    alive_.assign(ig_.num_agents, {});
    for (auto& a : alive_) {
      for (std::uint64_t s = 0; s < strategy_count_; ++s) a.push_back(s);
    }
  }

  // Strategy ids of `agent` dominated against the current survivors.
  std::vector<std::uint64_t> Dominated(int agent, bool first_only) const {
    const std::vector<SumVector> sums = OpponentSums(agent);
    const auto& alive = alive_[agent];
    std::vector<std::vector<std::int64_t>> payoff(alive.size());
    for (std::size_t a = 0; a < alive.size(); ++a) {
      payoff[a].reserve(sums.size());
      for (const SumVector& sigma : sums) {
        payoff[a].push_back(Payoff(agent, strategies_[alive[a]], sigma));
      }
    }
    std::vector<std::uint64_t> out;
    for (std::size_t a = 0; a < alive.size(); ++a) {
      for (std::size_t b = 0; b < alive.size(); ++b) {
        if (a == b) continue;
        bool strictly_better = true;
        for (std::size_t t = 0; t < sums.size(); ++t) {
          if (!(payoff[b][t] > payoff[a][t])) {
            strictly_better = false;
            break;
          }
        }
        if (strictly_better) {
          out.push_back(alive[a]);
          if (first_only) return out;
          break;
        }
      }
    }
    return out;
  }

  void Remove(int agent, const std::vector<std::uint64_t>& ids) {
    auto& alive = alive_[agent];
    std::erase_if(alive, [&](std::uint64_t s) {
      return std::find(ids.begin(), ids.end(), s) != ids.end();
    });
  }

  SurvivorSets Result(int rounds) const {
    SurvivorSets out;
    out.rounds = rounds;
    for (const auto& alive : alive_) {
      std::vector<Strategy> row;
      for (std::uint64_t s : alive) row.push_back(strategies_[s]);
      out.per_agent.push_back(std::move(row));
    }
    return out;
  }

  int num_agents() const { return ig_.num_agents; }

 private:
  std::int64_t Payoff(int agent, const Strategy& s,
                      const SumVector& sigma) const {
    std::int64_t u = 0;
    for (int j = 0; j < ig_.num_goals; ++j) {
      const std::int64_t c = ig_.costs[s[j]];
      u -= c;
      if (sigma[j] + c >= ig_.thresholds[j]) u += ig_.motivation(agent, j);
    }
    return u;
  }

  // Distinct per-goal contribution totals the opponents of `agent` can
  // produce with their surviving strategies. An agent's payoff depends on
  // the others only through these totals.
  std::vector<SumVector> OpponentSums(int agent) const {
    std::vector<SumVector> sums{SumVector(ig_.num_goals, 0)};
    for (int other = 0; other < ig_.num_agents; ++other) {
      if (other == agent) continue;
      std::vector<SumVector> next;
      next.reserve(sums.size() * alive_[other].size());
      for (const SumVector& base : sums) {
        for (std::uint64_t s : alive_[other]) {
          SumVector v = base;
          for (int j = 0; j < ig_.num_goals; ++j) {
            v[j] += ig_.costs[strategies_[s][j]];
          }
          next.push_back(std::move(v));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      sums = std::move(next);
    }
    return sums;
  }

  IntegerGame ig_;
  std::uint64_t strategy_count_;
  std::vector<Strategy> strategies_;
  std::vector<std::vector<std::uint64_t>> alive_;
};

}  // namespace

SurvivorSets Iesds(const Game& game, EliminationOrder order,
                   std::uint64_t cap) {
  const std::uint64_t per_agent =
      StrategyCount(game.costs().size(), game.num_goals());
  const std::uint64_t pairs =
      per_agent > (1u << 31) ? std::numeric_limits<std::uint64_t>::max()
                             : per_agent * per_agent * game.num_agents();
  if (pairs > cap) {
    throw CapExceeded("dominance elimination too large", pairs, cap);
  }

  DominanceSolver solver(game);
  int rounds = 0;
  if (order == EliminationOrder::kSimultaneous) {
    for (;;) {
      std::vector<std::vector<std::uint64_t>> doomed(solver.num_agents());
      bool any = false;
      for (int i = 0; i < solver.num_agents(); ++i) {
        doomed[i] = solver.Dominated(i, false);
        any = any || !doomed[i].empty();
      }
      if (!any) break;
      ++rounds;
      for (int i = 0; i < solver.num_agents(); ++i) {
        solver.Remove(i, doomed[i]);
      }
    }
  } else {
    for (;;) {
      bool removed = false;
      for (int i = 0; i < solver.num_agents() && !removed; ++i) {
        auto doomed = solver.Dominated(i, true);
        if (!doomed.empty()) {
          solver.Remove(i, doomed);
          removed = true;
        }
      }
      if (!removed) break;
      ++rounds;
    }
  }
  return solver.Result(rounds);
}

// ---------------------------------------------------------------------------

TheoremReport VerifyImportanceOfBeingDifferent(const Game& game) {
  TheoremReport report;
  const Classification cls = Classify(game);
  const CostSet& costs = game.costs();
  report.applicable = cls.is_extreme && cls.is_even &&
                      costs.lowest() == Rational(0) &&
                      costs.highest() == *cls.universal_threshold;

  const EquilibriumSet eq = Equilibria(game);
  report.equilibrium_count = eq.TotalCount();
  report.unique_equilibrium = report.equilibrium_count == 1;

  report.all_goals_achieved = report.equilibrium_count > 0;
  for (const auto& a : eq.achieved_fraction) {
    if (!a || *a != Rational(1)) report.all_goals_achieved = false;
  }

  if (report.unique_equilibrium) {
    ContributionProfile profile = eq.Profiles(1).front();
    bool diagonal = game.num_agents() == game.num_goals();
    for (int i = 0; i < profile.num_agents() && diagonal; ++i) {
      for (int j = 0; j < profile.num_goals(); ++j) {
        const Rational& paid = costs[profile(i, j)];
        const Rational expected = i == j ? game.threshold(j) : Rational(0);
        if (paid != expected) {
          diagonal = false;
          break;
        }
      }
    }
    report.equilibrium_is_diagonal = diagonal;
    report.equilibrium = std::move(profile);
  }
  return report;
}

}  // namespace achieve
