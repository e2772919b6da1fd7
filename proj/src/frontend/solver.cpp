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

#include "sepgame/frontend/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "sepgame/automaton/chained_game.hpp"
#include "sepgame/automaton/table_automaton.hpp"
#include "sepgame/combos/combos.hpp"
#include "sepgame/errors.hpp"
#include "sepgame/oracle/oracle.hpp"
#include "sepgame/safety/safety.hpp"
#include "sepgame/separators/separators.hpp"

namespace sepgame {

SafetyAutomaton
separating_automaton(const Objective& objective, std::uint32_t n)
{
    n = std::max<std::uint32_t>(n, 1);
    const int d = std::max(objective.d, 1);
    switch (objective.kind) {
    case ObjectiveKind::Safety:
        return trivial_automaton(objective);
    case ObjectiveKind::Parity:
        return parity_separator(n, d);
    case ObjectiveKind::MeanPayoff:
        return mp_separator(n, objective.N);
    case ObjectiveKind::ParityOrMP:
        return parity_mp_separator(parity_separator(n, d), mp_separator(n, objective.N), d);
    case ObjectiveKind::DisjMP:
        return disjmp_separator(n, objective.d, objective.N);
    }
    throw UsageError("unknown objective");
}

double
separator_size_bound(const Objective& objective, std::uint32_t n)
{
    n = std::max<std::uint32_t>(n, 1);
    const int d = std::max(objective.d, 1);
    switch (objective.kind) {
    case ObjectiveKind::Safety:
        return 1;
    case ObjectiveKind::Parity:
        return static_cast<double>(parity_size_bound(n, d));
    case ObjectiveKind::MeanPayoff:
        return static_cast<double>(mp_separator_size(n, objective.N));
    case ObjectiveKind::ParityOrMP:
        return (d + 1.0) * static_cast<double>(parity_separator(n, d).state_count()) *
               static_cast<double>(mp_separator_size(n, objective.N));
    case ObjectiveKind::DisjMP:
        return kUniversalSizeConstant * n * std::log2(n + 1.0) * objective.d * std::max(objective.N, 1);
    }
    return 0;
}

namespace {

using Clock = std::chrono::steady_clock;

double
elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void
fill_stats(SolveStats& stats, const SafetyAutomaton& aut, const Objective& objective, std::uint32_t n,
           const ChainedGame& product)
{
    stats.automaton_states = aut.state_count();
    stats.automaton_bound = separator_size_bound(objective, n);
    stats.automaton_states_used = product.automaton_states_used();
    stats.product_vertices = product.game().vertex_count();
    stats.product_edges = product.game().graph().edge_count();
}

} // namespace

SolveResult
solve(const Game& game, VertexId v0, Algorithm algo)
{
    if (v0 >= game.vertex_count()) throw UsageError("initial vertex " + std::to_string(v0) + " out of range");
    const auto start = Clock::now();
    SolveResult out;
    if (algo == Algorithm::Oracle) {
        out.eve_wins = eve_wins_bruteforce(game, v0);
    } else {
        const auto n = static_cast<std::uint32_t>(game.vertex_count());
        const auto aut = separating_automaton(game.objective(), n);
        const auto product = chained_game(game, aut, v0);
        const auto region = solve_safety(product.game());
        out.eve_wins = region.wins(*product.vertex_of(v0, aut.initial()));
        fill_stats(out.stats, aut, game.objective(), n, product);
    }
    out.stats.milliseconds = elapsed_ms(start);
    return out;
}

RegionResult
solve_region(const Game& game, Algorithm algo)
{
    const auto start = Clock::now();
    RegionResult out;
    if (algo == Algorithm::Oracle) {
        out.eve_wins = winning_region_bruteforce(game);
    } else {
        const auto n = static_cast<std::uint32_t>(game.vertex_count());
        const auto aut = separating_automaton(game.objective(), n);
        std::vector<VertexId> roots(game.vertex_count());
        std::iota(roots.begin(), roots.end(), VertexId{0});
        const auto product = chained_game(game, aut, roots);
        const auto region = solve_safety(product.game());
        out.eve_wins.resize(game.vertex_count());
        for (auto v : roots) out.eve_wins[v] = region.wins(*product.vertex_of(v, aut.initial()));
        fill_stats(out.stats, aut, game.objective(), n, product);
    }
    out.stats.milliseconds = elapsed_ms(start);
    return out;
}

} // namespace sepgame
