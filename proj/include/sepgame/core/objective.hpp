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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sepgame {

/**
 * Colours are stored unboxed as a short run of integers whose layout is fixed
 * by the objective:
 *   safety      -> ()               unit colour
 *   parity d    -> (p)              p in [0,d]
 *   mp N        -> (w)              w in [-N,N]
 *   parity-mp   -> (p, w)
 *   disj-mp d N -> (w_1, ..., w_d)
 */
using Color = std::vector<std::int32_t>;
using ColorView = std::span<const std::int32_t>;

enum class ObjectiveKind { Safety, Parity, MeanPayoff, ParityOrMP, DisjMP };

/**
 * Objective descriptor. It doubles as the alphabet descriptor of automata,
 * since the colour set is determined by the objective and its bounds.
 */
struct Objective
{
    ObjectiveKind kind = ObjectiveKind::Safety;
    int d = 0;
    int N = 0;

    static Objective safety();
    static Objective parity(int d);
    static Objective mean_payoff(int N);
    static Objective parity_or_mp(int d, int N);
    static Objective disj_mp(int d, int N);

    /** Number of integers per colour. */
    std::size_t arity() const;

    /** Explains why c is not a colour of this alphabet, or nullopt when it is. */
    std::optional<std::string> check(ColorView c) const;
    bool admits(ColorView c) const { return !check(c).has_value(); }

    /** Same colour layout and every colour of other is a colour of this. */
    bool subsumes(const Objective& other) const;

    /** Size of the alphabet; saturates at UINT64_MAX. */
    std::uint64_t letter_count() const;
    /** Mixed-radix index of an admitted colour, in [0, letter_count()). */
    std::uint64_t letter_index(ColorView c) const;
    Color letter(std::uint64_t index) const;
    std::vector<Color> letters() const;

    /** Slot of the priority in a colour (parity, parity-mp). */
    std::optional<std::size_t> priority_slot() const;
    /**
     * Slot of the weight read by mean-payoff reasoning: the weight for mp and
     * parity-mp, component `dimension` for disj-mp.
     */
    std::size_t weight_slot(std::optional<int> dimension = std::nullopt) const;

    /** Header form used by the game file format, e.g. "parity-mp 4 10". */
    std::string to_string() const;

    bool operator==(const Objective&) const = default;
};

std::string color_to_string(ColorView c);

} // namespace sepgame
