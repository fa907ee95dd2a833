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

#ifndef ACHIEVE_GAME_H_
#define ACHIEVE_GAME_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "achieve/errors.h"
#include "achieve/rational.h"

namespace achieve {

// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols,
                                        fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[Index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[Index(r, c)]; }

  std::span<T> row(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  std::span<const T> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// The K admissible contribution levels c_1 < c_2 < ... < c_K.
class CostSet {
 public:
  // Throws InvalidArgument unless K >= 2, c_1 >= 0 and strictly increasing.
  explicit CostSet(std::vector<Rational> choices);

  int size() const { return static_cast<int>(choices_.size()); }
  // Zero-based choice index.
  const Rational& operator[](int k) const { return choices_[k]; }
  const Rational& lowest() const { return choices_.front(); }
  const Rational& highest() const { return choices_.back(); }
  const std::vector<Rational>& values() const { return choices_; }

  // Index of an exact cost value, if it is one of the choices.
  std::optional<int> IndexOf(const Rational& value) const;

  friend bool operator==(const CostSet&, const CostSet&) = default;

 private:
  std::vector<Rational> choices_;
};

// An N-agent, M-goal achievement game. Agent i receives motivation w_ij when
// goal j is achieved, i.e. when the contributions toward j sum to at least
// g_j. Immutable once built.
class Game {
 public:
  // Checks shapes only. Thresholds may be any sign: a threshold <= 0 makes
  // its goal achieved regardless of contributions.
  Game(CostSet costs, std::vector<Rational> thresholds,
       Matrix<Rational> motivations);

  int num_agents() const { return motivations_.rows(); }
  int num_goals() const { return motivations_.cols(); }
  const CostSet& costs() const { return costs_; }
  const std::vector<Rational>& thresholds() const { return thresholds_; }
  const Rational& threshold(int goal) const { return thresholds_[goal]; }
  const Matrix<Rational>& motivations() const { return motivations_; }
  const Rational& motivation(int agent, int goal) const {
    return motivations_(agent, goal);
  }

  Game WithThreshold(int goal, Rational threshold) const;
  Game WithMotivationRow(int agent, std::span<const Rational> row) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  CostSet costs_;
  std::vector<Rational> thresholds_;
  Matrix<Rational> motivations_;
};

// Choice indices (zero-based into the cost set) of every agent toward every
// goal: entry (i, j) selects d_ij.
class ContributionProfile {
 public:
  ContributionProfile() = default;
  ContributionProfile(int agents, int goals) : choices_(agents, goals, 0) {}
  explicit ContributionProfile(Matrix<int> choices)
      : choices_(std::move(choices)) {}

  int num_agents() const { return choices_.rows(); }
  int num_goals() const { return choices_.cols(); }
  int& operator()(int agent, int goal) { return choices_(agent, goal); }
  int operator()(int agent, int goal) const { return choices_(agent, goal); }
  const Matrix<int>& choices() const { return choices_; }

  // Throws InvalidArgument if the shape or any index does not fit `game`.
  void Validate(const Game& game) const;

  friend bool operator==(const ContributionProfile&,
                         const ContributionProfile&) = default;
  friend auto operator<=>(const ContributionProfile&,
                          const ContributionProfile&) = default;

 private:
  Matrix<int> choices_;
};

struct Classification {
  bool is_individual_purpose = false;
  bool is_even = false;
  bool is_extreme = false;
  // Present iff is_even.
  std::optional<Rational> universal_threshold;
};

// True iff the contributions toward `goal` sum to at least its threshold.
bool GoalAchieved(const Game& game, const ContributionProfile& profile,
                  int goal);

// u_i = -sum_j d_ij + sum_j w_ij [goal j achieved].
Rational Utility(const Game& game, const ContributionProfile& profile,
                 int agent);

Classification Classify(const Game& game);

// ---------------------------------------------------------------------------
// Typed groups.
//
// A type code is an M-digit base-3 string. Digit d gives the agent's
// motivation toward that goal: (0, 1/M, 1)[d] + delta. For two goals the
// aliases A = "20", O = "11" and B = "02" are used.

using TypeCode = std::string;

struct GroupSpec {
  std::vector<TypeCode> agent_types;
  Rational delta{1, 4};
};

// Throws InvalidArgument on a code that is not M base-3 digits.
void ValidateTypeCode(std::string_view code, int num_goals);

// Single-letter alias for a two-goal code, if any.
std::optional<char> TypeAlias(std::string_view code);

// Orders codes the way canonical labels list them: descending digit strings,
// so A < O < B for two goals and the specialist on goal j sits in row j.
bool TypeCodeLess(std::string_view a, std::string_view b);

// Validates the group's codes and sorts them into canonical order.
GroupSpec Canonicalize(GroupSpec group, int num_goals);

// "AOOB" when every code has an alias, otherwise codes (or aliases) joined
// with '-', e.g. "002-020-200". Codes are sorted first.
std::string CanonicalLabel(const GroupSpec& group, int num_goals);

// Inverse of CanonicalLabel; accepts aliases for two goals. Throws
// ParseError on malformed labels.
GroupSpec ParseGroupLabel(std::string_view label, int num_goals,
                          Rational delta);

// Orders canonical labels by their code sequences (A < O < B).
bool LabelLess(std::string_view a, std::string_view b);

// The cost set {0, 1/M, 1} (collapsed to {0, 1} for a single goal).
CostSet StandardCosts(int num_goals);

// Game with standard costs, every threshold N/M, and motivation rows built
// from the group's type codes in canonical order.
Game StandardGame(int num_agents, int num_goals, const GroupSpec& group);

}  // namespace achieve

#endif  // ACHIEVE_GAME_H_
