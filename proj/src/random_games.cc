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

#include "achieve/random_games.h"

namespace achieve {

Game RandomTheoremGame(int num_agents, std::mt19937_64& rng) {
  if (num_agents < 1) throw InvalidArgument("need at least one agent");
  const Rational g(static_cast<std::int64_t>(1 + UniformIndex(rng, 3)));
  const Rational half = g / Rational(2);
  CostSet costs({Rational(0), half, g});
  const Rational step = costs[1] - costs[0];
  const Rational off_diagonal[3] = {Rational(0), step / Rational(4),
                                    step / Rational(2)};

  Matrix<Rational> w(num_agents, num_agents);
  for (int i = 0; i < num_agents; ++i) {
    for (int j = 0; j < num_agents; ++j) {
      if (i == j) {
        w(i, j) = g + Rational(1) +
                  Rational(static_cast<std::int64_t>(UniformIndex(rng, 9)), 8);
      } else {
        w(i, j) = off_diagonal[UniformIndex(rng, 3)];
      }
    }
  }
  return Game(std::move(costs), std::vector<Rational>(num_agents, g),
              std::move(w));
}

}  // namespace achieve
