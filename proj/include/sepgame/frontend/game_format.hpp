/*
 * Copyright 2026 The sepgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "sepgame/core/game.hpp"

namespace sepgame {

/**
 * Text format, one declaration per line, `#` starts a comment:
 *
 *   sepgame 1
 *   objective parity-mp 4 10
 *   vertices 2
 *   vertex 0 E
 *   vertex 1 A
 *   edge 0 1 2 -7
 *
 * Objectives are `safety`, `parity <d>`, `mp <N>`, `parity-mp <d> <N>` and
 * `disj-mp <d> <N>`; an edge carries 0, 1, 1, 2 or d colour integers
 * respectively. Errors are ParseError with 1-based line and column.
 */
Game parse_game(std::string_view text);

/** Canonical form: no comments, single spaces, edges in edge-id order. */
std::string print_game(const Game& game);

/** Objective from its kind name as written in files; unused parameters are ignored. */
Objective make_objective(std::string_view kind, int d, int N);

} // namespace sepgame
