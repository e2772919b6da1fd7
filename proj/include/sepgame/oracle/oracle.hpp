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
#include <vector>

#include "sepgame/core/game.hpp"
#include "sepgame/core/graph.hpp"
#include "sepgame/core/objective.hpp"

namespace sepgame {

/**
 * Parity or MP. Violated exactly when, for some odd p, an SCC of the edges
 * with priority <= p holds both an internal p-edge and a negative cycle: a
 * path can then loop through the negative cycle ever longer while revisiting
 * the p-edge.
 */
bool graph_satisfies_parity_or_mp(const Graph& g);

/** Every SCC is free of negative cycles in at least one dimension. */
bool graph_satisfies_disjmp(const Graph& g);

/** All infinite paths of g satisfy the objective given by g's alphabet. */
bool graph_satisfies(const Graph& g);

inline constexpr std::size_t kSubsetOracleMaxEdges = 16;

/**
 * Exhaustive search for a strongly connected edge set S witnessing a
 * violation of g's objective: an infinite path visiting exactly the edges of S
 * infinitely often loses. Throws GuardExceeded above kSubsetOracleMaxEdges
 * edges. Negative cycles are found with Floyd-Warshall.
 */
bool violating_subset_exists(const Graph& g);

inline constexpr std::uint64_t kStrategyOracleMaxStrategies = 1'000'000;

/**
 * Whether some positional Eve strategy sigma wins from v0, i.e.
 * G[sigma, v0] has no Eve sink and satisfies the objective. Only Eve vertices
 * reachable from v0 are enumerated; throws GuardExceeded when they admit more
 * than kStrategyOracleMaxStrategies strategies.
 */
bool eve_wins_bruteforce(const Game& game, VertexId v0);

/** eve_wins_bruteforce for every vertex. */
std::vector<bool> winning_region_bruteforce(const Game& game);

} // namespace sepgame
