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

#include "sepgame/combos/universal_sequence.hpp"

#include <numeric>
#include <unordered_map>

namespace sepgame {

namespace {

void
append(std::uint32_t n, std::vector<std::uint32_t>& out)
{
    if (n == 0) return;
    if (n == 1) {
        out.push_back(1);
        return;
    }
    append(n / 2, out);
    out.push_back(n);
    append(n - 1 - n / 2, out);
}

std::uint64_t
size_of(std::uint32_t n, std::unordered_map<std::uint32_t, std::uint64_t>& memo)
{
    if (n <= 1) return n;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const auto s = size_of(n / 2, memo) + n + size_of(n - 1 - n / 2, memo);
    memo.emplace(n, s);
    return s;
}

} // namespace

std::uint64_t
UniversalSequence::size() const
{
    return std::accumulate(values.begin(), values.end(), std::uint64_t{0});
}

UniversalSequence
universal_sequence(std::uint32_t n)
{
    UniversalSequence u;
    u.values.reserve(n);
    append(n, u.values);
    return u;
}

std::uint64_t
universal_sequence_size(std::uint32_t n)
{
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    return size_of(n, memo);
}

bool
embeds(std::span<const std::uint32_t> v, std::span<const std::uint32_t> u)
{
    std::size_t j = 0;
    for (auto x : v) {
        while (j < u.size() && u[j] < x) ++j;
        if (j == u.size()) return false;
        ++j;
    }
    return true;
}

} // namespace sepgame
