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

#include <cstdint>
#include <optional>
#include <vector>

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/core/game.hpp"

namespace sepgame {

enum class Algorithm { Separating, Oracle };

/**
 * The separating automaton used for games of the objective with at most n
 * vertices: trivial for safety, the universal-tree automaton for parity, the
 * counter for mp, their product for parity-mp and the universal-sequence
 * assembly for disj-mp. Parity with d = 0 is widened to d = 1.
 */
SafetyAutomaton separating_automaton(const Objective& objective, std::uint32_t n);

/** Size bound for separating_automaton(objective, n) as stated by the constructions. */
double separator_size_bound(const Objective& objective, std::uint32_t n);

struct SolveStats
{
    std::uint64_t automaton_states = 0;
    double automaton_bound = 0;
    std::size_t automaton_states_used = 0;
    std::size_t product_vertices = 0;
    std::size_t product_edges = 0;
    double milliseconds = 0;
};

struct SolveResult
{
    bool eve_wins = false;
    SolveStats stats;
};

struct RegionResult
{
    std::vector<bool> eve_wins;
    SolveStats stats;
};

SolveResult solve(const Game& game, VertexId v0, Algorithm algo = Algorithm::Separating);
RegionResult solve_region(const Game& game, Algorithm algo = Algorithm::Separating);

} // namespace sepgame
