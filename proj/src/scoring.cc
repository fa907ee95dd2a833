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

#include "achieve/scoring.h"

#include <algorithm>
#include <map>

#include "achieve/equilibrium.h"

namespace achieve {
namespace {

std::vector<GoalSummary> Summaries(const Game& game) {
  std::vector<GoalSummary> out;
  out.reserve(game.num_goals());
  for (int j = 0; j < game.num_goals(); ++j) {
    out.push_back(SummarizeGoal(game, j));
  }
  return out;
}

bool AnyEmpty(std::span<const GoalSummary> goals) {
  return std::any_of(goals.begin(), goals.end(),
                     [](const GoalSummary& s) { return s.count == 0; });
}

Rational Fraction(const GoalSummary& s) {
  return Rational(static_cast<std::int64_t>(s.achieved),
                  static_cast<std::int64_t>(s.count));
}

std::optional<Rational> MgaOf(std::span<const GoalSummary> goals) {
  if (AnyEmpty(goals)) return std::nullopt;
  Rational total;
  for (const auto& s : goals) total += Fraction(s);
  return total / Rational(static_cast<std::int64_t>(goals.size()));
}

std::optional<Rational> AllOf(std::span<const GoalSummary> goals) {
  if (AnyEmpty(goals)) return std::nullopt;
  Rational product(1);
  for (const auto& s : goals) product *= Fraction(s);
  return product;
}

// Adds one scenario's MGA (zero when it has no equilibrium).
void Accumulate(ScenarioScore& acc, std::span<const GoalSummary> goals) {
  if (auto mga = MgaOf(goals)) {
    acc.value += *mga;
  } else {
    ++acc.no_equilibrium_scenarios;
  }
}

ScenarioScore DdFromGame(const Game& game, const Rational& defector) {
  const std::vector<Rational> defector_row(game.num_goals(), defector);
  // Agents sharing a motivation row give identical scenarios.
  std::map<std::vector<Rational>, std::vector<GoalSummary>> cache;
  ScenarioScore acc;
  for (int i = 0; i < game.num_agents(); ++i) {
    auto row = game.motivations().row(i);
    std::vector<Rational> key(row.begin(), row.end());
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(std::move(key),
                         Summaries(game.WithMotivationRow(i, defector_row)))
               .first;
    }
    Accumulate(acc, it->second);
  }
  acc.value /= Rational(game.num_agents());
  return acc;
}

ScenarioScore VlFromGame(const Game& game,
                         const std::vector<GoalSummary>& base) {
  ScenarioScore acc;
  for (int j = 0; j < game.num_goals(); ++j) {
    for (int shift : {+1, -1}) {
      // Only goal j's equilibria change; the other goals are untouched.
      std::vector<GoalSummary> goals = base;
      const Game variant =
          game.WithThreshold(j, game.threshold(j) + Rational(shift));
      goals[j] = SummarizeGoal(variant, j);
      Accumulate(acc, goals);
    }
  }
  acc.value /= Rational(2 * game.num_goals());
  return acc;
}

}  // namespace

std::optional<Rational> Mga(const Game& game) {
  return MgaOf(Summaries(game));
}

std::optional<Rational> AllScore(const Game& game) {
  return AllOf(Summaries(game));
}

ScenarioScore DdScore(const Game& game, const Rational& defector_motivation) {
  return DdFromGame(game, defector_motivation);
}

ScenarioScore VlScore(const Game& game) {
  return VlFromGame(game, Summaries(game));
}

Rational Divergence(const Game& game) {
  Rational best;
  const auto& w = game.motivations();
  for (int a = 0; a < game.num_agents(); ++a) {
    for (int b = a + 1; b < game.num_agents(); ++b) {
      Rational d;
      for (int k = 0; k < game.num_goals(); ++k) {
        const Rational diff = w(a, k) - w(b, k);
        d += diff * diff;
      }
      best = std::max(best, d);
    }
  }
  return best / Rational(game.num_goals());
}

Rational MeanMotivation(const Game& game) {
  Rational total;
  for (int i = 0; i < game.num_agents(); ++i) {
    for (const auto& w : game.motivations().row(i)) total += w;
  }
  return total / Rational(game.num_agents());
}

ScoreReport Score(const Game& game, const Rational& defector_motivation) {
  ScoreReport report;
  const std::vector<GoalSummary> base = Summaries(game);
  for (const auto& s : base) report.equilibrium_counts.push_back(s.count);
  if (AnyEmpty(base)) return report;

  report.mga = MgaOf(base);
  report.all_score = AllOf(base);
  const ScenarioScore dd = DdFromGame(game, defector_motivation);
  const ScenarioScore vl = VlFromGame(game, base);
  report.dd = dd.value;
  report.vl = vl.value;
  report.no_equilibrium_scenarios =
      dd.no_equilibrium_scenarios + vl.no_equilibrium_scenarios;
  return report;
}

// ---------------------------------------------------------------------------

std::vector<RankedRow> RankTable(std::span<const LabeledScores> rows) {
  std::vector<RankedRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    const ScoreReport& r = row.report;
    if (!r.mga || !r.all_score || !r.dd || !r.vl) {
      throw InvalidArgument("group " + row.label +
                            " is missing a score and cannot be ranked");
    }
    RankedRow ranked;
    ranked.label = row.label;
    ranked.scores = {*r.mga, *r.all_score, *r.dd, *r.vl};
    out.push_back(std::move(ranked));
  }

  for (int s = 0; s < kNumScores; ++s) {
    for (auto& row : out) {
      // Minimum tied rank: one plus the number of strictly better rows.
      row.ranks[s] = 1 + static_cast<int>(std::count_if(
                             out.begin(), out.end(), [&](const RankedRow& o) {
                               return o.scores[s] > row.scores[s];
                             }));
    }
  }

  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = a + 1; b < out.size(); ++b) {
      int a_better = 0;
      int b_better = 0;
      for (int s = 0; s < kNumScores; ++s) {
        if (out[a].ranks[s] < out[b].ranks[s]) ++a_better;
        if (out[b].ranks[s] < out[a].ranks[s]) ++b_better;
      }
      if (a_better > b_better) {
        ++out[a].wins;
      } else if (b_better > a_better) {
        ++out[b].wins;
      } else {
        ++out[a].ties;
        ++out[b].ties;
      }
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const RankedRow& x, const RankedRow& y) {
                     if (x.wins != y.wins) return x.wins > y.wins;
                     if (x.ties != y.ties) return x.ties > y.ties;
                     return LabelLess(x.label, y.label);
                   });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Rational Median(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / Rational(2);
}

}  // namespace

Rational MedianAbsoluteDeviation(std::vector<Rational> values) {
  if (values.empty()) throw InvalidArgument("MAD of an empty set");
  const Rational center = Median(values);
  for (auto& v : values) v = Abs(v - center);
  return Median(std::move(values));
}

std::vector<BinnedComparison> BinnedTopDifference(
    std::span<const SweepRecord> records, const Rational& width,
    const Rational& divergence_cutoff) {
  if (width.sign() <= 0) throw InvalidArgument("bin width must be positive");

  struct Sides {
    std::vector<Rational> divergent;
    std::vector<Rational> nondivergent;
  };
  std::map<std::int64_t, Sides> bins;
  for (const auto& r : records) {
    if (!r.mga) continue;
    const std::int64_t k = (r.mean_motivation / width).Floor();
    Sides& sides = bins[k];
    (r.divergence >= divergence_cutoff ? sides.divergent : sides.nondivergent)
        .push_back(*r.mga);
  }

  std::vector<BinnedComparison> out;
  for (const auto& [k, sides] : bins) {
    BinnedComparison bin;
    bin.bin_low = width * Rational(k);
    bin.bin_high = bin.bin_low + width;
    if (!sides.divergent.empty()) {
      bin.top_divergent_mga =
          *std::max_element(sides.divergent.begin(), sides.divergent.end());
    }
    if (!sides.nondivergent.empty()) {
      bin.top_nondivergent_mga = *std::max_element(sides.nondivergent.begin(),
                                                   sides.nondivergent.end());
    }
    if (bin.top_divergent_mga && bin.top_nondivergent_mga) {
      bin.difference = *bin.top_divergent_mga - *bin.top_nondivergent_mga;
    }
    Rational ribbon;
    if (!sides.divergent.empty()) {
      ribbon += MedianAbsoluteDeviation(sides.divergent);
    }
    if (!sides.nondivergent.empty()) {
      ribbon += MedianAbsoluteDeviation(sides.nondivergent);
    }
    bin.ribbon_width = ribbon;
    out.push_back(std::move(bin));
  }
  return out;
}

}  // namespace achieve
