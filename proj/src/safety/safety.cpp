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

#include "sepgame/safety/safety.hpp"

#include <cstdint>

#include "sepgame/errors.hpp"

namespace sepgame {

std::vector<VertexId>
WinningRegion::vertices() const
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < eve_wins.size(); ++v) {
        if (eve_wins[v]) out.push_back(v);
    }
    return out;
}

std::vector<bool>
adam_attractor(const Game& game, const std::vector<bool>& target)
{
    const auto& g = game.graph();
    const std::size_t n = g.vertex_count();
    if (target.size() != n) throw UsageError("attractor target must have one flag per vertex");

    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> remaining(n, 0);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        remaining[v] = static_cast<std::uint32_t>(g.out_degree(v));
        if (target[v] || (game.owner(v) == Player::Eve && remaining[v] == 0)) {
            in[v] = true;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId x = queue[head];
        for (auto e : g.in_edges(x)) {
            const VertexId u = g.source(e);
            if (in[u]) continue;
            if (game.owner(u) == Player::Adam || --remaining[u] == 0) {
                in[u] = true;
                queue.push_back(u);
            }
        }
    }
    return in;
}

WinningRegion
solve_safety(const Game& game)
{
    const auto& g = game.graph();
    const std::size_t n = g.vertex_count();
    std::vector<bool> eve_sinks(n, false);
    for (VertexId v = 0; v < n; ++v) eve_sinks[v] = game.owner(v) == Player::Eve && g.is_sink(v);

    auto losing = adam_attractor(game, eve_sinks);
    WinningRegion region;
    region.eve_wins.resize(n);
    region.witness = PositionalStrategy(n);
    for (VertexId v = 0; v < n; ++v) region.eve_wins[v] = !losing[v];
    for (VertexId v = 0; v < n; ++v) {
        if (!region.eve_wins[v] || game.owner(v) != Player::Eve) continue;
        for (auto e : g.out_edges(v)) {
            if (region.eve_wins[g.target(e)]) {
                region.witness.set(v, e);
                break;
            }
        }
    }
    return region;
}

} // namespace sepgame
