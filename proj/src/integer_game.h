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

#ifndef ACHIEVE_SRC_INTEGER_GAME_H_
#define ACHIEVE_SRC_INTEGER_GAME_H_

#include <cstdint>
#include <vector>

#include "achieve/game.h"

namespace achieve::internal {

// A game with every cost, threshold and motivation multiplied by the least
// common multiple of their denominators. Comparisons between scaled values
// are exact, which lets the enumeration loops run on plain integers.
struct IntegerGame {
  explicit IntegerGame(const Game& game);

  std::int64_t motivation(int agent, int goal) const {
    return motivations[static_cast<std::size_t>(agent) * num_goals + goal];
  }

  int num_agents = 0;
  int num_goals = 0;
  int num_costs = 0;
  std::int64_t scale = 1;
  std::vector<std::int64_t> costs;
  std::vector<std::int64_t> thresholds;
  std::vector<std::int64_t> motivations;
};

}  // namespace achieve::internal

#endif  // ACHIEVE_SRC_INTEGER_GAME_H_
