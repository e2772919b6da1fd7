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

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/automaton/chained_game.hpp"

namespace sepgame {

/**
 * Graphviz rendering of the states reachable from q0. Parallel letters are
 * merged into one edge label; undefined transitions point at a bottom node
 * drawn as a double octagon. Node order is breadth-first, letters in index
 * order. Throws GuardExceeded beyond max_states.
 */
std::string automaton_to_dot(const SafetyAutomaton& aut, std::size_t max_states = 5000);

/** Product vertices labelled (v, q); Adam vertices are boxes, bottom a double octagon. */
std::string chained_game_to_dot(const ChainedGame& chained, const SafetyAutomaton& aut);

} // namespace sepgame
