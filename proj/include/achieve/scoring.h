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

#ifndef ACHIEVE_SCORING_H_
#define ACHIEVE_SCORING_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "achieve/game.h"
#include "achieve/rational.h"

namespace achieve {

// Group performance scores of one game. A score is missing when the base
// game has a goal without any pure equilibrium.
struct ScoreReport {
  std::optional<Rational> mga;
  std::optional<Rational> all_score;
  std::optional<Rational> dd;
  std::optional<Rational> vl;
  // Defector and variable-load scenarios that had no equilibrium; each of
  // them counted as zero goal achievement in its average.
  int no_equilibrium_scenarios = 0;
  std::vector<std::uint64_t> equilibrium_counts;
};

// Average over scenarios plus the number of scenarios without equilibria.
struct ScenarioScore {
  Rational value;
  int no_equilibrium_scenarios = 0;
};

// Mean over goals of the fraction of equilibria achieving each goal.
std::optional<Rational> Mga(const Game& game);
// Fraction of equilibria that achieve every goal.
std::optional<Rational> AllScore(const Game& game);
// Mean MGA over the N games where one agent's motivation row is replaced by
// (defector_motivation, ..., defector_motivation).
ScenarioScore DdScore(const Game& game, const Rational& defector_motivation);
// Mean MGA over the 2M games where one threshold is moved by +1 or -1.
ScenarioScore VlScore(const Game& game);

// (1/M) max over agent pairs of the squared distance between motivation rows.
Rational Divergence(const Game& game);
// Sum of all motivations divided by the number of agents.
Rational MeanMotivation(const Game& game);

ScoreReport Score(const Game& game, const Rational& defector_motivation);

// ---------------------------------------------------------------------------
// Ranked tables.

inline constexpr int kNumScores = 4;  // MGA, ALL, DD, VL

struct LabeledScores {
  std::string label;
  ScoreReport report;
};

struct RankedRow {
  std::string label;
  std::array<Rational, kNumScores> scores;
  // Descending ranks; ties share the minimum rank.
  std::array<int, kNumScores> ranks{};
  int wins = 0;
  int ties = 0;
};

// Ranks every score, then compares each pair of groups: the group that is
// ranked better on more scores wins, equal counts tie. Sorted by wins, then
// ties (both descending), then label. Throws InvalidArgument on a missing
// score.
std::vector<RankedRow> RankTable(std::span<const LabeledScores> rows);

// ---------------------------------------------------------------------------
// Binned comparison of divergent and non-divergent groups.

struct SweepRecord {
  std::string label;
  int num_agents = 0;
  int num_goals = 0;
  Rational mean_motivation;
  Rational divergence;
  bool divergent = false;
  std::optional<Rational> mga;
  std::optional<Rational> all_score;
  std::optional<Rational> dd;
  std::optional<Rational> vl;
  std::vector<std::uint64_t> equilibrium_counts;
  int no_equilibrium_scenarios = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct BinnedComparison {
  Rational bin_low;
  Rational bin_high;
  std::optional<Rational> top_divergent_mga;
  std::optional<Rational> top_nondivergent_mga;
  std::optional<Rational> difference;
  // MAD(divergent MGAs) + MAD(non-divergent MGAs); an empty side adds 0.
  std::optional<Rational> ribbon_width;
};

// Median absolute deviation from the median (no consistency constant).
Rational MedianAbsoluteDeviation(std::vector<Rational> values);

// Buckets records by mean motivation into [k w, (k+1) w) and compares the
// best MGA of the divergent (divergence >= cutoff) and non-divergent records
// in each bucket. Only non-empty buckets are returned, in ascending order.
// Records without an MGA are skipped.
std::vector<BinnedComparison> BinnedTopDifference(
    std::span<const SweepRecord> records, const Rational& width,
    const Rational& divergence_cutoff);

}  // namespace achieve

#endif  // ACHIEVE_SCORING_H_
