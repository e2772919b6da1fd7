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
#include <span>
#include <vector>

namespace sepgame {

/**
 * u_0 = (), u_1 = (1), u_n = u_{floor(n/2)} + (n) + u_{n-1-floor(n/2)}.
 * Every sequence of positive integers with sum at most n embeds into u_n.
 */
struct UniversalSequence
{
    std::vector<std::uint32_t> values;

    std::size_t length() const { return values.size(); }
    /** Sum of the entries. */
    std::uint64_t size() const;
};

UniversalSequence universal_sequence(std::uint32_t n);

/** Sum of u_n from the size recurrence, without building the sequence. */
std::uint64_t universal_sequence_size(std::uint32_t n);

/**
 * Largest |u_n| / (n * log2(n + 1)) over n in [1, 256]; attained at n = 1.
 * Used as the constant in the O(n log n) size checks.
 */
inline constexpr double kUniversalSizeConstant = 1.0;

/**
 * Whether there is an increasing f with v[i] <= u[f(i)] for all i.
 * Greedy leftmost fit, O(|v| + |u|).
 */
bool embeds(std::span<const std::uint32_t> v, std::span<const std::uint32_t> u);

} // namespace sepgame
