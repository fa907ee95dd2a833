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

#ifndef ACHIEVE_GAME_IO_H_
#define ACHIEVE_GAME_IO_H_

#include <string>
#include <string_view>

#include "achieve/game.h"

namespace achieve {

// Game documents are JSON objects:
//
//   {
//     "agents": 2,
//     "goals": 2,
//     "costs": ["0", "1/2", "1"],
//     "thresholds": ["1", "1"],
//     "motivations": [["5/4", "1/4"], ["1/4", "5/4"]]
//   }
//
// Every number except the two counts is a rational string. Base games must
// have positive thresholds. Errors carry the 1-based line and column of the
// offending token when it can be located.
Game ParseGameDocument(std::string_view text);
std::string WriteGameDocument(const Game& game);

// Profile documents hold the contribution matrix as cost values:
//
//   { "contributions": [["1", "0"], ["0", "1"]] }
//
// Each entry must be one of the game's cost values.
ContributionProfile ParseProfileDocument(std::string_view text,
                                         const Game& game);
std::string WriteProfileDocument(const Game& game,
                                 const ContributionProfile& profile);

// Reads a whole file; throws ParseError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace achieve

#endif  // ACHIEVE_GAME_IO_H_
