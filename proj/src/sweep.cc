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

#include "achieve/sweep.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "achieve/equilibrium.h"

namespace achieve {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::string Quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Display(const std::optional<Rational>& r) {
  return r ? r->ToFixed(2) : std::string();
}

std::string Exact(const std::optional<Rational>& r) {
  return r ? r->ToFractionString() : std::string();
}

void WriteRow(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << Quote(fields[i]);
  }
  os << '\n';
}

}  // namespace

void ValidateConfig(const SweepConfig& config) {
  if (config.num_agents < 1) throw InvalidArgument("need at least one agent");
  if (config.num_goals < 1) throw InvalidArgument("need at least one goal");
  if (config.num_goals > 12) throw InvalidArgument("at most 12 goals");
  if (config.bin_width.sign() <= 0) {
    throw InvalidArgument("bin width must be positive");
  }
  if (config.delta.sign() < 0) {
    throw InvalidArgument("delta must be non-negative");
  }
  if (config.workers < 1) throw InvalidArgument("need at least one worker");
  if (config.universe == TypeUniverse::kAbo && config.num_goals != 2) {
    throw InvalidArgument("the A/O/B type universe needs exactly two goals");
  }
}

std::vector<TypeCode> UniverseCodes(TypeUniverse universe, int num_goals) {
  std::vector<TypeCode> codes;
  if (universe == TypeUniverse::kAbo) {
    codes = {"20", "11", "02"};
  } else {
    int total = 1;
    for (int j = 0; j < num_goals; ++j) total *= 3;
    for (int v = 0; v < total; ++v) {
      TypeCode code(num_goals, '0');
      int rest = v;
      for (int j = num_goals - 1; j >= 0; --j) {
        code[j] = static_cast<char>('0' + rest % 3);
        rest /= 3;
      }
      codes.push_back(std::move(code));
    }
  }
  std::sort(codes.begin(), codes.end(),
            [](const TypeCode& a, const TypeCode& b) {
              return TypeCodeLess(a, b);
            });
  return codes;
}

std::uint64_t MultisetCount(std::uint64_t types, int agents) {
  // C(types + agents - 1, agents), built incrementally so every step is an
  // exact integer.
  std::uint64_t out = 1;
  for (int k = 1; k <= agents; ++k) {
    const std::uint64_t factor = types + k - 1;
    if (out > kSaturated / factor) return kSaturated;
    out = out * factor / k;
  }
  return out;
}

std::vector<GroupSpec> EnumerateGroups(const SweepConfig& config) {
  ValidateConfig(config);
  const std::vector<TypeCode> codes =
      UniverseCodes(config.universe, config.num_goals);
  const int types = static_cast<int>(codes.size());
  const int n = config.num_agents;

  std::vector<GroupSpec> groups;
  std::vector<int> pick(n, 0);
  for (;;) {
    GroupSpec group;
    group.delta = config.delta;
    for (int p : pick) group.agent_types.push_back(codes[p]);
    groups.push_back(std::move(group));
    // Next non-decreasing index sequence.
    int pos = n - 1;
    while (pos >= 0 && pick[pos] == types - 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < n; ++q) pick[q] = pick[pos];
  }
  return groups;
}

std::uint64_t EstimateWork(const SweepConfig& config) {
  ValidateConfig(config);
  const std::uint64_t types =
      UniverseCodes(config.universe, config.num_goals).size();
  const std::uint64_t groups = MultisetCount(types, config.num_agents);
  const std::uint64_t games = 1 + config.num_agents + 2 * config.num_goals;
  std::uint64_t columns = 1;
  const std::uint64_t k = StandardCosts(config.num_goals).size();
  for (int i = 0; i < config.num_agents; ++i) {
    columns = SaturatingMul(columns, k);
  }
  return SaturatingMul(SaturatingMul(groups, games),
                       SaturatingMul(config.num_goals, columns));
}

SweepRecord EvaluateGroup(const SweepConfig& config, const GroupSpec& group) {
  const Game game = StandardGame(config.num_agents, config.num_goals, group);
  const ScoreReport report = Score(game, group.delta);
  SweepRecord r;
  r.label = CanonicalLabel(group, config.num_goals);
  r.num_agents = config.num_agents;
  r.num_goals = config.num_goals;
  r.mean_motivation = MeanMotivation(game);
  r.divergence = Divergence(game);
  r.divergent = r.divergence >= config.divergence_cutoff;
  r.mga = report.mga;
  r.all_score = report.all_score;
  r.dd = report.dd;
  r.vl = report.vl;
  r.equilibrium_counts = report.equilibrium_counts;
  r.no_equilibrium_scenarios = report.no_equilibrium_scenarios;
  return r;
}

std::vector<SweepRecord> RunSweep(const SweepConfig& config) {
  ValidateConfig(config);
  const std::uint64_t work = EstimateWork(config);
  if (config.work_cap != 0 && work > config.work_cap) {
    throw CapExceeded("sweep of " + std::to_string(config.num_agents) +
                          " agents and " + std::to_string(config.num_goals) +
                          " goals is too large; pass --allow-large to run it",
                      work, config.work_cap);
  }

  const std::vector<GroupSpec> groups = EnumerateGroups(config);
  std::vector<SweepRecord> records(groups.size());
  const int workers =
      std::min<int>(config.workers, std::max<std::size_t>(groups.size(), 1));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work_loop = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= groups.size() || failed.load()) return;
      try {
        records[i] = EvaluateGroup(config, groups[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };

  if (workers <= 1) {
    work_loop();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work_loop);
  }
  if (error) std::rethrow_exception(error);
  return records;
}

std::vector<RankedRow> BuildTable(const SweepConfig& config) {
  const std::vector<SweepRecord> records = RunSweep(config);
  std::vector<LabeledScores> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    ScoreReport report;
    report.mga = r.mga;
    report.all_score = r.all_score;
    report.dd = r.dd;
    report.vl = r.vl;
    rows.push_back({r.label, std::move(report)});
  }
  return RankTable(rows);
}

void WriteSweepCsv(std::ostream& os, std::span<const SweepRecord> records) {
  os << "label,n_agents,n_goals,mean_motivation,mean_motivation_exact,"
        "divergence,divergence_exact,divergent,mga,mga_exact,all,all_exact,"
        "dd,dd_exact,vl,vl_exact,eq_counts,no_eq_scenarios\n";
  for (const auto& r : records) {
    std::string counts;
    for (std::size_t j = 0; j < r.equilibrium_counts.size(); ++j) {
      if (j > 0) counts += ';';
      counts += std::to_string(r.equilibrium_counts[j]);
    }
    WriteRow(os, {r.label, std::to_string(r.num_agents),
                  std::to_string(r.num_goals), r.mean_motivation.ToFixed(2),
                  r.mean_motivation.ToFractionString(), r.divergence.ToFixed(2),
                  r.divergence.ToFractionString(), r.divergent ? "1" : "0",
                  Display(r.mga), Exact(r.mga), Display(r.all_score),
                  Exact(r.all_score), Display(r.dd), Exact(r.dd),
                  Display(r.vl), Exact(r.vl), counts,
                  std::to_string(r.no_equilibrium_scenarios)});
  }
}

void WriteTableCsv(std::ostream& os, std::span<const RankedRow> rows) {
  os << "motivations,mga,all,dd,vl,mgar,allr,ddr,vlr,wins,ties\n";
  for (const auto& r : rows) {
    std::vector<std::string> fields{r.label};
    for (const auto& s : r.scores) fields.push_back(s.ToFixed(2));
    for (int rank : r.ranks) fields.push_back(std::to_string(rank));
    fields.push_back(std::to_string(r.wins));
    fields.push_back(std::to_string(r.ties));
    WriteRow(os, fields);
  }
}

void WriteBinnedCsv(std::ostream& os,
                    std::span<const BinnedComparison> bins) {
  os << "bin_low,bin_high,top_div,top_nondiv,diff,ribbon\n";
  for (const auto& b : bins) {
    WriteRow(os, {b.bin_low.ToFixed(2), b.bin_high.ToFixed(2),
                  Display(b.top_divergent_mga),
                  Display(b.top_nondivergent_mga), Display(b.difference),
                  Display(b.ribbon_width)});
  }
}

}  // namespace achieve
