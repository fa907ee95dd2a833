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

#ifndef ACHIEVE_RANDOM_GAMES_H_
#define ACHIEVE_RANDOM_GAMES_H_

#include <cstdint>
#include <random>

#include "achieve/game.h"

namespace achieve {

// Uniform integer in [0, bound). Uses the raw 64-bit engine output so the
// sequence is identical on every standard library.
inline std::uint64_t UniformIndex(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

// An extreme even individual purpose game of `num_agents` agents with
// lowest cost 0 and highest cost equal to the universal threshold:
//   g uniform in {1, 2, 3}, costs {0, g/2, g},
//   w_ii = g + 1 + u/8 with u uniform in {0..8},
//   w_ij uniform in {0, (c_2 - c_1)/4, (c_2 - c_1)/2} for i != j.
Game RandomTheoremGame(int num_agents, std::mt19937_64& rng);

}  // namespace achieve

#endif  // ACHIEVE_RANDOM_GAMES_H_
