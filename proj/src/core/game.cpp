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

#include "sepgame/core/game.hpp"

#include "sepgame/errors.hpp"

namespace sepgame {

Game::Game(Graph graph, std::vector<Player> owner) : graph_(std::move(graph)), owner_(std::move(owner))
{
    if (owner_.size() != graph_.vertex_count())
        throw InvariantViolation("owner must be defined for every vertex");
}

} // namespace sepgame
