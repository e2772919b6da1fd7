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

#include "sepgame/core/strategy.hpp"

#include <deque>
#include <limits>
#include <string>

#include "sepgame/errors.hpp"

namespace sepgame {

void
PositionalStrategy::validate(const Game& game) const
{
    const auto& g = game.graph();
    if (choice_.size() != g.vertex_count())
        throw InvariantViolation("strategy size does not match the game");
    for (VertexId v = 0; v < choice_.size(); ++v) {
        if (choice_[v] == kNone) continue;
        if (game.owner(v) != Player::Eve)
            throw InvariantViolation("strategy chooses at Adam vertex " + std::to_string(v));
        if (choice_[v] >= g.edge_count() || g.source(choice_[v]) != v)
            throw InvariantViolation("strategy choice at vertex " + std::to_string(v) + " is not an outgoing edge");
    }
}

Restriction
restrict_to_strategy(const Game& game, const PositionalStrategy& sigma, VertexId v0)
{
    const auto& g = game.graph();
    if (v0 >= g.vertex_count()) throw UsageError("initial vertex out of range");
    constexpr VertexId kAbsent = std::numeric_limits<VertexId>::max();

    std::vector<VertexId> renamed(g.vertex_count(), kAbsent);
    Restriction out;
    auto visit = [&](VertexId v) {
        if (renamed[v] == kAbsent) {
            renamed[v] = static_cast<VertexId>(out.original.size());
            out.original.push_back(v);
        }
    };
    auto kept = [&](VertexId v, EdgeId e) {
        if (game.owner(v) == Player::Adam) return true;
        const auto c = sigma.choice(v);
        return c && *c == e;
    };

    visit(v0);
    for (std::size_t head = 0; head < out.original.size(); ++head) {
        const VertexId v = out.original[head];
        for (auto e : g.out_edges(v)) {
            if (kept(v, e)) visit(g.target(e));
        }
    }

    GraphBuilder builder(out.original.size(), g.alphabet());
    for (auto v : out.original) {
        for (auto e : g.out_edges(v)) {
            if (!kept(v, e)) continue;
            builder.add_edge(renamed[v], renamed[g.target(e)], g.color(e));
            out.original_edge.push_back(e);
        }
    }
    out.graph = std::move(builder).build();
    out.owner.reserve(out.original.size());
    for (auto v : out.original) out.owner.push_back(game.owner(v));
    return out;
}

} // namespace sepgame
