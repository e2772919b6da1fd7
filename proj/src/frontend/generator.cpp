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

#include "sepgame/frontend/generator.hpp"

#include <algorithm>

#include "sepgame/errors.hpp"

namespace sepgame {

Color
random_color(Random& rng, const Objective& objective)
{
    Color c(objective.arity());
    const auto ps = objective.priority_slot();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (ps && *ps == i) c[i] = static_cast<std::int32_t>(rng.between(0, objective.d));
        else c[i] = static_cast<std::int32_t>(rng.between(-objective.N, objective.N));
    }
    return c;
}

Game
generate_game(const GeneratorParams& params)
{
    if (params.vertices == 0) throw UsageError("generator needs at least one vertex");
    if (params.min_degree > params.max_degree) throw UsageError("min degree exceeds max degree");

    Random rng(params.seed);
    const std::uint32_t n = params.vertices;
    const std::uint64_t letters = params.objective.letter_count();
    const std::uint64_t distinct = letters > std::numeric_limits<std::uint64_t>::max() / n
                                       ? std::numeric_limits<std::uint64_t>::max()
                                       : letters * n;

    std::vector<Player> owner(n);
    for (auto& o : owner) o = rng.coin() ? Player::Eve : Player::Adam;

    GraphBuilder builder(n, params.objective);
    for (VertexId v = 0; v < n; ++v) {
        const auto hi = std::min<std::uint64_t>(params.max_degree, distinct);
        const auto lo = std::min<std::uint64_t>(params.min_degree, hi);
        const auto degree = static_cast<std::uint64_t>(rng.between(static_cast<std::int64_t>(lo),
                                                                   static_cast<std::int64_t>(hi)));
        for (std::uint64_t k = 0; k < degree;) {
            const auto target = static_cast<VertexId>(rng.below(n));
            const auto color = random_color(rng, params.objective);
            if (builder.contains(v, target, color)) continue;
            builder.add_edge(v, target, color);
            ++k;
        }
    }
    return Game(std::move(builder).build(), std::move(owner));
}

} // namespace sepgame
