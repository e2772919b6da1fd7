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

#include "sepgame/automaton/chained_game.hpp"

#include <unordered_set>

#include "sepgame/errors.hpp"
#include "sepgame/safety/safety.hpp"

namespace sepgame {

std::optional<VertexId>
ChainedGame::vertex_of(VertexId v, StateId q) const
{
    return index_.find(v, q);
}

std::pair<VertexId, StateId>
ChainedGame::pair_of(VertexId product_vertex) const
{
    if (product_vertex == bottom_ || product_vertex >= pairs_.size())
        throw UsageError("product vertex has no (vertex, state) pair");
    return pairs_[product_vertex];
}

std::size_t
ChainedGame::automaton_states_used() const
{
    std::unordered_set<StateId> states;
    for (VertexId p = 0; p < pairs_.size(); ++p) {
        if (p != bottom_) states.insert(pairs_[p].second);
    }
    return states.size();
}

ChainedGame
chained_game(const Game& game, const SafetyAutomaton& aut, VertexId v0)
{
    const VertexId roots[] = {v0};
    return chained_game(game, aut, roots);
}

ChainedGame
chained_game(const Game& game, const SafetyAutomaton& aut, std::span<const VertexId> roots)
{
    const auto& g = game.graph();
    if (!aut.alphabet().subsumes(g.alphabet())) {
        throw UsageError("automaton alphabet " + aut.alphabet().to_string() + " does not cover game objective " +
                         g.alphabet().to_string());
    }
    ChainedGame out;
    out.index_ = detail::PairIndex(g.vertex_count(), aut.state_count());
    constexpr std::pair<VertexId, StateId> kBottomPair{~VertexId{0}, ~StateId{0}};

    GraphBuilder builder(0, Objective::safety(), GraphBuilder::Duplicates::Allow);
    auto intern = [&](VertexId v, StateId q) {
        const auto fresh = static_cast<VertexId>(out.pairs_.size());
        auto [id, inserted] = out.index_.insert(v, q, fresh);
        if (inserted) {
            if (out.pairs_.size() >= std::size_t{0xFFFFFFFE}) throw GuardExceeded("chained game too large");
            out.pairs_.emplace_back(v, q);
            builder.add_vertices(1);
        }
        return id;
    };
    for (auto v : roots) {
        if (v >= g.vertex_count()) throw UsageError("initial vertex out of range");
        intern(v, aut.initial());
    }

    for (VertexId head = 0; head < out.pairs_.size(); ++head) {
        if (head == out.bottom_) continue;
        const auto [v, q] = out.pairs_[head];
        for (auto e : g.out_edges(v)) {
            VertexId to;
            if (auto next = aut.delta(q, g.color(e))) {
                to = intern(g.target(e), *next);
            } else {
                if (!out.bottom_) {
                    out.bottom_ = static_cast<VertexId>(out.pairs_.size());
                    out.pairs_.push_back(kBottomPair);
                    builder.add_vertices(1);
                }
                to = *out.bottom_;
            }
            builder.add_edge(head, to, {});
            out.origin_.push_back(e);
        }
    }

    std::vector<Player> owner(out.pairs_.size());
    for (VertexId p = 0; p < out.pairs_.size(); ++p)
        owner[p] = p == out.bottom_ ? Player::Eve : game.owner(out.pairs_[p].first);
    out.game_ = Game(std::move(builder).build(), std::move(owner));
    return out;
}

bool
solve_via_separating(const Game& game, VertexId v0, const SafetyAutomaton& aut)
{
    const auto chained = chained_game(game, aut, v0);
    const auto region = solve_safety(chained.game());
    return region.wins(*chained.vertex_of(v0, aut.initial()));
}

std::vector<bool>
winning_region_via_separating(const Game& game, const SafetyAutomaton& aut)
{
    std::vector<VertexId> roots(game.vertex_count());
    for (VertexId v = 0; v < roots.size(); ++v) roots[v] = v;
    const auto chained = chained_game(game, aut, roots);
    const auto region = solve_safety(chained.game());
    std::vector<bool> out(game.vertex_count());
    for (VertexId v = 0; v < roots.size(); ++v) out[v] = region.wins(*chained.vertex_of(v, aut.initial()));
    return out;
}

} // namespace sepgame
