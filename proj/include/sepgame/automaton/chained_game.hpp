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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/automaton/pair_index.hpp"
#include "sepgame/core/game.hpp"

namespace sepgame {

/**
 * The safety game G |> A restricted to the pairs (v, q) reachable from the
 * roots (v0, q0). An edge (v, c, v') of G leads from (v, q) to
 * (v', delta(q, c)), or to the Eve sink bottom when delta(q, c) is undefined.
 * Bottom is only materialized when some undefined transition is reachable.
 * Product edges keep a link to the game edge they come from, so parallel
 * product edges may exist.
 */
class ChainedGame
{
  public:
    const Game& game() const { return game_; }
    std::optional<VertexId> bottom() const { return bottom_; }

    std::optional<VertexId> vertex_of(VertexId v, StateId q) const;
    /** (game vertex, automaton state) of a product vertex other than bottom. */
    std::pair<VertexId, StateId> pair_of(VertexId product_vertex) const;
    /** Game edge behind a product edge. */
    EdgeId origin(EdgeId product_edge) const { return origin_[product_edge]; }
    /** Distinct automaton states occurring in the product. */
    std::size_t automaton_states_used() const;

  private:
    friend ChainedGame chained_game(const Game&, const SafetyAutomaton&, std::span<const VertexId>);

    Game game_;
    std::optional<VertexId> bottom_;
    std::vector<std::pair<VertexId, StateId>> pairs_;
    std::vector<EdgeId> origin_;
    detail::PairIndex index_;
};

ChainedGame chained_game(const Game& game, const SafetyAutomaton& aut, VertexId v0);
ChainedGame chained_game(const Game& game, const SafetyAutomaton& aut, std::span<const VertexId> roots);

/**
 * Whether Eve wins (v0, q0) in G |> A. Equals whether she wins v0 in G when A
 * is (n, objective)-separating with n >= |G| and the objective is positionally
 * determined.
 */
bool solve_via_separating(const Game& game, VertexId v0, const SafetyAutomaton& aut);

/** Same question for every vertex at once, from one multi-root product. */
std::vector<bool> winning_region_via_separating(const Game& game, const SafetyAutomaton& aut);

} // namespace sepgame
