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

#include "achieve/cli.h"

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "achieve/equilibrium.h"
#include "achieve/game_io.h"
#include "achieve/random_games.h"
#include "achieve/scoring.h"
#include "achieve/sweep.h"

namespace achieve {
namespace {

// Raised for bad flag values discovered after CLI11 parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Rational ParseFlag(const std::string& name, const std::string& value) {
  auto r = Rational::TryParse(value);
  if (!r) {
    throw UsageError("--" + name + ": malformed rational \"" + value + "\"");
  }
  return *r;
}

std::string FormatValues(std::span<const Rational> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ", ";
    s += values[i].ToString();
  }
  return s;
}

std::string FormatProfile(const Game& game, const ContributionProfile& p) {
  std::string s = "[";
  for (int i = 0; i < p.num_agents(); ++i) {
    if (i > 0) s += ", ";
    s += "[";
    for (int j = 0; j < p.num_goals(); ++j) {
      if (j > 0) s += ", ";
      s += game.costs()[p(i, j)].ToString();
    }
    s += "]";
  }
  return s + "]";
}

std::string YesNo(bool b) { return b ? "yes" : "no"; }

std::string ScoreText(const std::optional<Rational>& r) {
  if (!r) return "n/a";
  return r->ToFixed(2) + " (" + r->ToString() + ")";
}

void WriteToFile(const std::string& path,
                 const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write \"" + path + "\"");
  body(file);
  if (!file) throw UsageError("failed writing \"" + path + "\"");
}

TypeUniverse ParseUniverse(const std::string& types, int goals) {
  if (types.empty()) {
    return goals == 2 ? TypeUniverse::kAbo : TypeUniverse::kFullGrid;
  }
  return types == "ABO" ? TypeUniverse::kAbo : TypeUniverse::kFullGrid;
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::string game_path;
  std::string profile_path;
  std::string defector = "1/4";
  bool brute_force = false;
  bool iesds = false;
};

int CmdAnalyze(const AnalyzeOptions& opts, std::ostream& out,
               std::ostream& err) {
  const Game game = ParseGameDocument(ReadFile(opts.game_path));
  const Rational defector = ParseFlag("defector", opts.defector);
  std::optional<ContributionProfile> profile;
  if (!opts.profile_path.empty()) {
    profile = ParseProfileDocument(ReadFile(opts.profile_path), game);
  }

  const int n = game.num_agents();
  const int m = game.num_goals();
  out << "game: " << n << " agents, " << m << " goals\n";
  out << "costs: {" << FormatValues(game.costs().values()) << "}\n";
  out << "thresholds: (" << FormatValues(game.thresholds()) << ")\n";

  const Classification cls = Classify(game);
  out << "individual purpose: " << YesNo(cls.is_individual_purpose) << "\n";
  out << "even: " << YesNo(cls.is_even);
  if (cls.universal_threshold) out << " (g = " << *cls.universal_threshold << ")";
  out << "\n";
  out << "extreme: " << YesNo(cls.is_extreme) << "\n";

  const EquilibriumSet eq = Equilibria(game);
  for (int j = 0; j < m; ++j) {
    out << "goal " << j + 1 << ": " << eq.per_goal[j].size()
        << " equilibrium column(s)";
    if (eq.achieved_fraction[j]) {
      out << ", achieved in " << *eq.achieved_fraction[j];
    }
    out << "\n";
    for (const GoalColumn& col : eq.per_goal[j]) {
      std::vector<Rational> values;
      for (int c : col) values.push_back(game.costs()[c]);
      out << "  (" << FormatValues(values) << ")\n";
    }
  }
  out << "equilibria: " << eq.TotalCount() << "\n";

  const ScoreReport scores = Score(game, defector);
  out << "MGA: " << ScoreText(scores.mga) << "\n";
  out << "ALL: " << ScoreText(scores.all_score) << "\n";
  out << "DD: " << ScoreText(scores.dd) << "\n";
  out << "VL: " << ScoreText(scores.vl) << "\n";
  if (scores.no_equilibrium_scenarios > 0) {
    out << "scenarios without equilibrium: " << scores.no_equilibrium_scenarios
        << "\n";
  }
  out << "divergence: " << Divergence(game) << "\n";
  out << "mean motivation: " << MeanMotivation(game) << "\n";

  int status = kExitOk;
  if (opts.brute_force) {
    const auto oracle = BruteForceEquilibria(game);
    const bool match = oracle == eq.Profiles();
    out << "brute force: " << oracle.size() << " equilibria, "
        << (match ? "matches" : "DOES NOT match") << " per-goal enumeration\n";
    if (!match) {
      err << "error: per-goal enumeration disagrees with brute force\n";
      status = kExitVerificationFailed;
    }
  }
  if (opts.iesds) {
    const SurvivorSets survivors = Iesds(game);
    out << "dominance elimination: " << survivors.rounds << " round(s)\n";
    for (int i = 0; i < n; ++i) {
      out << "  agent " << i + 1 << ":";
      for (const Strategy& s : survivors.per_agent[i]) {
        std::vector<Rational> values;
        for (int c : s) values.push_back(game.costs()[c]);
        out << " (" << FormatValues(values) << ")";
      }
      out << "\n";
    }
  }

  if (profile) {
    out << "profile: " << FormatProfile(game, *profile) << "\n";
    for (int j = 0; j < m; ++j) {
      out << "  goal " << j + 1 << " achieved: "
          << YesNo(GoalAchieved(game, *profile, j)) << "\n";
    }
    for (int i = 0; i < n; ++i) {
      out << "  utility of agent " << i + 1 << ": "
          << Utility(game, *profile, i) << "\n";
    }
    out << (IsEquilibrium(game, *profile) ? "equilibrium\n"
                                          : "not an equilibrium\n");
  }
  return status;
}

// ---------------------------------------------------------------------------

struct SizeOptions {
  int agents = 0;
  int goals = 0;
  std::string delta = "1/4";
  std::string types;
  std::string output;
};

int CmdTable(const SizeOptions& opts, std::ostream& out) {
  SweepConfig config;
  config.num_agents = opts.agents;
  config.num_goals = opts.goals;
  config.delta = ParseFlag("delta", opts.delta);
  config.universe = ParseUniverse(opts.types, opts.goals);
  const std::vector<RankedRow> rows = BuildTable(config);
  if (opts.output.empty()) {
    WriteTableCsv(out, rows);
  } else {
    WriteToFile(opts.output, [&](std::ostream& os) { WriteTableCsv(os, rows); });
  }
  return kExitOk;
}

struct SweepOptions : SizeOptions {
  std::string cutoff = "1/2";
  std::string bin_width = "1/10";
  int workers = 1;
  bool allow_large = false;
  std::string binned_output;
};

int CmdSweep(const SweepOptions& opts, std::ostream& out) {
  SweepConfig config;
  config.num_agents = opts.agents;
  config.num_goals = opts.goals;
  config.delta = ParseFlag("delta", opts.delta);
  config.divergence_cutoff = ParseFlag("cutoff", opts.cutoff);
  config.bin_width = ParseFlag("bin-width", opts.bin_width);
  config.workers = opts.workers;
  config.universe = opts.types == "ABO" ? TypeUniverse::kAbo
                                        : TypeUniverse::kFullGrid;
  if (opts.allow_large) config.work_cap = 0;

  const std::vector<SweepRecord> records = RunSweep(config);
  const std::vector<BinnedComparison> bins = BinnedTopDifference(
      records, config.bin_width, config.divergence_cutoff);

  const std::string stem = "sweep_" + std::to_string(opts.agents) + "x" +
                           std::to_string(opts.goals);
  const std::string sweep_path =
      opts.output.empty() ? stem + ".csv" : opts.output;
  std::string binned_path = opts.binned_output;
  if (binned_path.empty()) {
    binned_path = sweep_path;
    const auto dot = binned_path.rfind(".csv");
    if (dot != std::string::npos && dot + 4 == binned_path.size()) {
      binned_path.erase(dot);
    }
    binned_path += "_binned.csv";
  }
  WriteToFile(sweep_path,
              [&](std::ostream& os) { WriteSweepCsv(os, records); });
  WriteToFile(binned_path, [&](std::ostream& os) { WriteBinnedCsv(os, bins); });
  out << "wrote " << records.size() << " records to " << sweep_path << "\n";
  out << "wrote " << bins.size() << " bins to " << binned_path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct TheoremOptions {
  int agents = 0;
  int trials = 100;
  std::uint64_t seed = 1;
};

int CmdVerifyTheorem(const TheoremOptions& opts, std::ostream& out,
                     std::ostream& err) {
  if (opts.agents < 2) {
    throw UsageError("--agents must be at least 2 for a non-vacuous check");
  }
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");

  std::mt19937_64 rng(opts.seed);
  int passed = 0;
  for (int t = 1; t <= opts.trials; ++t) {
    const Game game = RandomTheoremGame(opts.agents, rng);
    const TheoremReport report = VerifyImportanceOfBeingDifferent(game);
    const bool ok = report.applicable && report.unique_equilibrium &&
                    report.equilibrium_is_diagonal &&
                    report.all_goals_achieved;
    out << "trial " << t << ": " << (ok ? "pass" : "FAIL");
    if (report.equilibrium) {
      out << "  equilibrium " << FormatProfile(game, *report.equilibrium);
    } else {
      out << "  " << report.equilibrium_count << " equilibria";
    }
    out << "\n";
    if (ok) {
      ++passed;
    } else {
      err << "counterexample (trial " << t << "): applicable="
          << report.applicable << " unique=" << report.unique_equilibrium
          << " diagonal=" << report.equilibrium_is_diagonal
          << " all_achieved=" << report.all_goals_achieved << "\n"
          << WriteGameDocument(game);
    }
  }
  out << passed << "/" << opts.trials << " trials passed\n";
  return passed == opts.trials ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Multi-goal achievement games: equilibria and group scores"};
  app.name("achieve");
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Classify a game, enumerate its equilibria and score it");
  analyze_cmd->add_option("game", analyze.game_path, "Game document (JSON)")
      ->required();
  analyze_cmd->add_option("--profile", analyze.profile_path,
                          "Contribution profile document to evaluate");
  analyze_cmd->add_option("--defector", analyze.defector,
                          "Motivation of the injected defector (DD score)");
  analyze_cmd->add_flag("--brute-force", analyze.brute_force,
                        "Cross-check equilibria with an exhaustive scan");
  analyze_cmd->add_flag("--iesds", analyze.iesds,
                        "Report strategies surviving dominance elimination");

  SizeOptions table;
  auto* table_cmd =
      app.add_subcommand("table", "Ranked score table of all typed groups");
  table_cmd->add_option("--agents", table.agents)->required();
  table_cmd->add_option("--goals", table.goals)->required();
  table_cmd->add_option("--delta", table.delta, "Excess motivation");
  table_cmd->add_option("--types", table.types, "ABO or full")
      ->check(CLI::IsMember({"ABO", "full"}));
  table_cmd->add_option("--output", table.output, "CSV path (default stdout)");

  SweepOptions sweep;
  sweep.types = "full";
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Score every group composition to CSV");
  sweep_cmd->add_option("--agents", sweep.agents)->required();
  sweep_cmd->add_option("--goals", sweep.goals)->required();
  sweep_cmd->add_option("--delta", sweep.delta, "Excess motivation");
  sweep_cmd->add_option("--cutoff", sweep.cutoff,
                        "Divergence at or above which a group is divergent");
  sweep_cmd->add_option("--bin-width", sweep.bin_width,
                        "Mean-motivation bin width");
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads");
  sweep_cmd->add_option("--types", sweep.types, "ABO or full")
      ->check(CLI::IsMember({"ABO", "full"}));
  sweep_cmd->add_flag("--allow-large", sweep.allow_large,
                      "Run configurations beyond the work guardrail");
  sweep_cmd->add_option("--output", sweep.output, "Sweep CSV path");
  sweep_cmd->add_option("--binned-output", sweep.binned_output,
                        "Binned comparison CSV path");

  TheoremOptions theorem;
  auto* theorem_cmd = app.add_subcommand(
      "verify-theorem",
      "Check random extreme even individual purpose games for a unique "
      "diagonal equilibrium");
  theorem_cmd->add_option("--agents", theorem.agents)->required();
  theorem_cmd->add_option("--trials", theorem.trials);
  theorem_cmd->add_option("--seed", theorem.seed);

  std::vector<const char*> argv{"achieve"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return CmdAnalyze(analyze, out, err);
    if (*table_cmd) return CmdTable(table, out);
    if (*sweep_cmd) return CmdSweep(sweep, out);
    if (*theorem_cmd) return CmdVerifyTheorem(theorem, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace achieve
