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
#include <vector>

#include "sepgame/core/game.hpp"

namespace sepgame {

/** Positional strategy for Eve: a partial map from Eve vertices to outgoing edges. */
class PositionalStrategy
{
  public:
    PositionalStrategy() = default;
    explicit PositionalStrategy(std::size_t vertex_count) : choice_(vertex_count, kNone) {}

    void set(VertexId v, EdgeId e) { choice_.at(v) = e; }
    void clear(VertexId v) { choice_.at(v) = kNone; }
    std::optional<EdgeId> choice(VertexId v) const
    {
        if (v >= choice_.size() || choice_[v] == kNone) return std::nullopt;
        return choice_[v];
    }
    std::size_t vertex_count() const { return choice_.size(); }

    /** Throws InvariantViolation unless every choice leaves its own Eve vertex. */
    void validate(const Game& game) const;

  private:
    static constexpr EdgeId kNone = ~EdgeId{0};
    std::vector<EdgeId> choice_;
};

/** G[sigma, v0] with re-indexed vertices; original[i] is the game vertex of vertex i. */
struct Restriction
{
    Graph graph;
    std::vector<Player> owner;
    std::vector<VertexId> original;
    /** Edge i of graph is edge original_edge[i] of the game. */
    std::vector<EdgeId> original_edge;
};

/**
 * Restricts the game to vertices reachable from v0 when Eve follows sigma,
 * keeping every Adam edge and only the chosen edge of each Eve vertex. Eve
 * vertices without a choice become sinks. Vertex 0 of the result is v0.
 */
Restriction restrict_to_strategy(const Game& game, const PositionalStrategy& sigma, VertexId v0);

} // namespace sepgame
