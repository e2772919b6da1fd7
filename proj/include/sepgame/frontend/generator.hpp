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
#include <limits>
#include <random>

#include "sepgame/core/game.hpp"

namespace sepgame {

/**
 * mt19937_64 with portable bounded draws. The standard distributions are
 * implementation-defined, which would tie seeded output to one library.
 */
class Random
{
  public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    /** Uniform in [0, bound); bound > 0. */
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /** Uniform in [lo, hi]. */
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (engine_() >> 63) != 0; }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

struct GeneratorParams
{
    std::uint32_t vertices = 1;
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 2;
    Objective objective = Objective::safety();
    std::uint64_t seed = 0;
};

/**
 * Random game: each vertex gets an out-degree uniform in
 * [min_degree, max_degree] (capped by the number of distinct edges it can
 * have), uniform owner, uniform targets and uniform colours within bounds.
 * Identical parameters give identical games.
 */
Game generate_game(const GeneratorParams& params);

/** Uniform colour of the objective's alphabet. */
Color random_color(Random& rng, const Objective& objective);

} // namespace sepgame
