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

#include <vector>

#include "sepgame/core/game.hpp"
#include "sepgame/core/strategy.hpp"

namespace sepgame {

/** Vertices from which Eve wins, with a positional witness on them. */
struct WinningRegion
{
    std::vector<bool> eve_wins;
    PositionalStrategy witness;

    bool wins(VertexId v) const { return eve_wins[v]; }
    std::vector<VertexId> vertices() const;
};

/**
 * Least X containing target such that an Adam vertex with an edge into X
 * and an Eve vertex with all of its edges into X (Eve sinks included) belong
 * to X. O(n + m) with per-vertex countdowns.
 */
std::vector<bool> adam_attractor(const Game& game, const std::vector<bool>& target);

/**
 * Safety game solver. Colours are ignored; Eve loses exactly at her own sinks.
 * The witness picks, for each winning Eve vertex, its first edge that stays
 * in the winning region.
 */
WinningRegion solve_safety(const Game& game);

} // namespace sepgame
