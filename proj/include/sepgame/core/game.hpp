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

#include "sepgame/core/graph.hpp"

namespace sepgame {

enum class Player : std::uint8_t { Eve, Adam };

/** Arena plus objective. The objective is the alphabet of the underlying graph. */
class Game
{
  public:
    Game() = default;
    Game(Graph graph, std::vector<Player> owner);

    const Graph& graph() const { return graph_; }
    const Objective& objective() const { return graph_.alphabet(); }
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    Player owner(VertexId v) const { return owner_[v]; }
    const std::vector<Player>& owners() const { return owner_; }

  private:
    Graph graph_;
    std::vector<Player> owner_;
};

} // namespace sepgame
