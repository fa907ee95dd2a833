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

#include "achieve/game.h"

#include <algorithm>
#include <utility>

namespace achieve {

CostSet::CostSet(std::vector<Rational> choices) : choices_(std::move(choices)) {
  if (choices_.size() < 2) {
    throw InvalidArgument("cost set needs at least two choices");
  }
  if (choices_.front().sign() < 0) {
    throw InvalidArgument("lowest cost must be non-negative");
  }
  for (std::size_t k = 1; k < choices_.size(); ++k) {
    if (!(choices_[k - 1] < choices_[k])) {
      throw InvalidArgument("costs must be strictly increasing");
    }
  }
}

std::optional<int> CostSet::IndexOf(const Rational& value) const {
  auto it = std::lower_bound(choices_.begin(), choices_.end(), value);
  if (it == choices_.end() || *it != value) return std::nullopt;
  return static_cast<int>(it - choices_.begin());
}

Game::Game(CostSet costs, std::vector<Rational> thresholds,
           Matrix<Rational> motivations)
    : costs_(std::move(costs)),
      thresholds_(std::move(thresholds)),
      motivations_(std::move(motivations)) {
  if (motivations_.rows() < 1 || motivations_.cols() < 1) {
    throw InvalidArgument("game needs at least one agent and one goal");
  }
  if (static_cast<int>(thresholds_.size()) != motivations_.cols()) {
    throw InvalidArgument("expected " + std::to_string(motivations_.cols()) +
                          " thresholds, got " +
                          std::to_string(thresholds_.size()));
  }
}

Game Game::WithThreshold(int goal, Rational threshold) const {
  if (goal < 0 || goal >= num_goals()) {
    throw InvalidArgument("goal index out of range");
  }
  Game copy = *this;
  copy.thresholds_[goal] = threshold;
  return copy;
}

Game Game::WithMotivationRow(int agent, std::span<const Rational> row) const {
  if (agent < 0 || agent >= num_agents()) {
    throw InvalidArgument("agent index out of range");
  }
  if (static_cast<int>(row.size()) != num_goals()) {
    throw InvalidArgument("motivation row has the wrong length");
  }
  Game copy = *this;
  std::copy(row.begin(), row.end(), copy.motivations_.row(agent).begin());
  return copy;
}

void ContributionProfile::Validate(const Game& game) const {
  if (num_agents() != game.num_agents() || num_goals() != game.num_goals()) {
    throw InvalidArgument("profile shape " + std::to_string(num_agents()) +
                          "x" + std::to_string(num_goals()) +
                          " does not match game " +
                          std::to_string(game.num_agents()) + "x" +
                          std::to_string(game.num_goals()));
  }
  const int k = game.costs().size();
  for (int i = 0; i < num_agents(); ++i) {
    for (int j = 0; j < num_goals(); ++j) {
      int c = (*this)(i, j);
      if (c < 0 || c >= k) {
        throw InvalidArgument("choice index out of range at (" +
                              std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

bool GoalAchieved(const Game& game, const ContributionProfile& profile,
                  int goal) {
  if (goal < 0 || goal >= game.num_goals()) {
    throw InvalidArgument("goal index out of range");
  }
  profile.Validate(game);
  Rational total;
  for (int i = 0; i < game.num_agents(); ++i) {
    total += game.costs()[profile(i, goal)];
  }
  return total >= game.threshold(goal);
}

Rational Utility(const Game& game, const ContributionProfile& profile,
                 int agent) {
  if (agent < 0 || agent >= game.num_agents()) {
    throw InvalidArgument("agent index out of range");
  }
  profile.Validate(game);
  Rational u;
  for (int j = 0; j < game.num_goals(); ++j) {
    u -= game.costs()[profile(agent, j)];
    if (GoalAchieved(game, profile, j)) u += game.motivation(agent, j);
  }
  return u;
}

Classification Classify(const Game& game) {
  Classification out;
  const int n = game.num_agents();
  if (n != game.num_goals()) return out;

  bool purpose = true;
  for (int i = 0; i < n && purpose; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& w = game.motivation(i, j);
      const Rational& g = game.threshold(j);
      if (i == j ? !(w > g) : !(w < g)) {
        purpose = false;
        break;
      }
    }
  }
  if (!purpose) return out;
  out.is_individual_purpose = true;

  const auto& t = game.thresholds();
  if (std::all_of(t.begin(), t.end(),
                  [&](const Rational& g) { return g == t.front(); })) {
    out.is_even = true;
    out.universal_threshold = t.front();
  }

  const Rational step = game.costs()[1] - game.costs()[0];
  out.is_extreme = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !(game.motivation(i, j) < step)) out.is_extreme = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

TypeCode AliasToCode(char alias) {
  switch (alias) {
    case 'A':
      return "20";
    case 'O':
      return "11";
    case 'B':
      return "02";
  }
  return {};
}

}  // namespace

void ValidateTypeCode(std::string_view code, int num_goals) {
  if (static_cast<int>(code.size()) != num_goals) {
    throw InvalidArgument("type code \"" + std::string(code) + "\" must have " +
                          std::to_string(num_goals) + " digits");
  }
  for (char ch : code) {
    if (ch < '0' || ch > '2') {
      throw InvalidArgument("type code \"" + std::string(code) +
                            "\" must use digits 0, 1, 2");
    }
  }
}

std::optional<char> TypeAlias(std::string_view code) {
  if (code == "20") return 'A';
  if (code == "11") return 'O';
  if (code == "02") return 'B';
  return std::nullopt;
}

bool TypeCodeLess(std::string_view a, std::string_view b) { return a > b; }

GroupSpec Canonicalize(GroupSpec group, int num_goals) {
  for (const auto& code : group.agent_types) ValidateTypeCode(code, num_goals);
  std::sort(group.agent_types.begin(), group.agent_types.end(),
            [](const TypeCode& a, const TypeCode& b) {
              return TypeCodeLess(a, b);
            });
  return group;
}

std::string CanonicalLabel(const GroupSpec& group, int num_goals) {
  GroupSpec sorted = Canonicalize(group, num_goals);
  bool all_alias = num_goals == 2;
  for (const auto& code : sorted.agent_types) {
    if (!TypeAlias(code)) all_alias = false;
  }
  std::string label;
  for (const auto& code : sorted.agent_types) {
    if (all_alias) {
      label += *TypeAlias(code);
      continue;
    }
    if (!label.empty()) label += '-';
    if (num_goals == 2 && TypeAlias(code)) {
      label += *TypeAlias(code);
    } else {
      label += code;
    }
  }
  return label;
}

GroupSpec ParseGroupLabel(std::string_view label, int num_goals,
                          Rational delta) {
  GroupSpec group;
  group.delta = delta;
  if (label.empty()) throw ParseError("empty group label");
  std::size_t start = 0;
  while (start <= label.size()) {
    std::size_t end = label.find('-', start);
    if (end == std::string_view::npos) end = label.size();
    std::string_view token = label.substr(start, end - start);
    if (token.empty()) {
      throw ParseError("empty token in group label \"" + std::string(label) +
                       "\"");
    }
    const bool letters = std::all_of(token.begin(), token.end(), [](char c) {
      return c == 'A' || c == 'O' || c == 'B';
    });
    if (letters) {
      if (num_goals != 2) {
        throw ParseError("type aliases A/O/B need exactly two goals");
      }
      for (char c : token) group.agent_types.push_back(AliasToCode(c));
    } else {
      try {
        ValidateTypeCode(token, num_goals);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
      group.agent_types.emplace_back(token);
    }
    start = end + 1;
  }
  return Canonicalize(std::move(group), num_goals);
}

bool LabelLess(std::string_view a, std::string_view b) {
  auto codes = [](std::string_view label) {
    std::vector<TypeCode> out;
    if (label.find('-') == std::string_view::npos &&
        label.find_first_not_of("AOB") == std::string_view::npos) {
      for (char c : label) out.push_back(AliasToCode(c));
      return out;
    }
    std::size_t start = 0;
    while (start <= label.size()) {
      std::size_t end = label.find('-', start);
      if (end == std::string_view::npos) end = label.size();
      std::string_view token = label.substr(start, end - start);
      out.push_back(token.size() == 1 && !AliasToCode(token[0]).empty()
                        ? AliasToCode(token[0])
                        : TypeCode(token));
      start = end + 1;
    }
    return out;
  };
  const auto x = codes(a);
  const auto y = codes(b);
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(),
      [](const TypeCode& l, const TypeCode& r) { return TypeCodeLess(l, r); });
}

CostSet StandardCosts(int num_goals) {
  if (num_goals < 1) throw InvalidArgument("need at least one goal");
  if (num_goals == 1) return CostSet({Rational(0), Rational(1)});
  return CostSet({Rational(0), Rational(1, num_goals), Rational(1)});
}

Game StandardGame(int num_agents, int num_goals, const GroupSpec& group) {
  if (num_agents < 1 || num_goals < 1) {
    throw InvalidArgument("need at least one agent and one goal");
  }
  if (static_cast<int>(group.agent_types.size()) != num_agents) {
    throw InvalidArgument("group has " +
                          std::to_string(group.agent_types.size()) +
                          " agents, expected " + std::to_string(num_agents));
  }
  if (group.delta.sign() < 0) {
    throw InvalidArgument("excess motivation delta must be non-negative");
  }
  for (const auto& code : group.agent_types) {
    ValidateTypeCode(code, num_goals);
  }

  const Rational levels[3] = {Rational(0), Rational(1, num_goals),
                              Rational(1)};
  GroupSpec sorted = Canonicalize(group, num_goals);
  Matrix<Rational> w(num_agents, num_goals);
  for (int i = 0; i < num_agents; ++i) {
    for (int j = 0; j < num_goals; ++j) {
      w(i, j) = levels[sorted.agent_types[i][j] - '0'] + group.delta;
    }
  }
  std::vector<Rational> thresholds(num_goals, Rational(num_agents, num_goals));
  return Game(StandardCosts(num_goals), std::move(thresholds), std::move(w));
}

}  // namespace achieve
