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

#ifndef ACHIEVE_SWEEP_H_
#define ACHIEVE_SWEEP_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "achieve/game.h"
#include "achieve/rational.h"
#include "achieve/scoring.h"

namespace achieve {

// Work units (per-goal column checks) allowed without an explicit opt-in.
// Every N <= 5, M <= 3 configuration fits except N = 5, M = 3.
inline constexpr std::uint64_t kDefaultSweepWorkCap = 200'000'000;

enum class TypeUniverse {
  kAbo,       // A, O, B; two goals only
  kFullGrid,  // all 3^M codes
};

struct SweepConfig {
  int num_agents = 2;
  int num_goals = 2;
  Rational delta{1, 4};
  TypeUniverse universe = TypeUniverse::kFullGrid;
  Rational divergence_cutoff{1, 2};
  Rational bin_width{1, 10};
  int workers = 1;
  // 0 disables the guardrail.
  std::uint64_t work_cap = kDefaultSweepWorkCap;
};

// Throws InvalidArgument on an unusable configuration.
void ValidateConfig(const SweepConfig& config);

// Type codes of the universe in canonical order.
std::vector<TypeCode> UniverseCodes(TypeUniverse universe, int num_goals);

// C(types + agents - 1, agents), saturating.
std::uint64_t MultisetCount(std::uint64_t types, int agents);

// Every multiset of N agent types, each in canonical order; groups are
// listed lexicographically by their positions in the universe.
std::vector<GroupSpec> EnumerateGroups(const SweepConfig& config);

// groups * (1 + N + 2M) scored games * M * K^N column checks.
std::uint64_t EstimateWork(const SweepConfig& config);

SweepRecord EvaluateGroup(const SweepConfig& config, const GroupSpec& group);

// Scores every group. Throws CapExceeded when EstimateWork exceeds the cap.
// Output order does not depend on the worker count.
std::vector<SweepRecord> RunSweep(const SweepConfig& config);

// Scores every group and ranks them. Throws InvalidArgument if a group has
// no equilibrium.
std::vector<RankedRow> BuildTable(const SweepConfig& config);

// CSV writers: header row, LF line endings, quoting only when a field
// contains a comma or quote. Missing values are empty fields.
void WriteSweepCsv(std::ostream& os, std::span<const SweepRecord> records);
void WriteTableCsv(std::ostream& os, std::span<const RankedRow> rows);
void WriteBinnedCsv(std::ostream& os,
                    std::span<const BinnedComparison> bins);

}  // namespace achieve

#endif  // ACHIEVE_SWEEP_H_
