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

#include "sepgame/separators/separators.hpp"

#include <limits>

#include "sepgame/errors.hpp"

namespace sepgame {

ParityTreeAutomaton::ParityTreeAutomaton(std::uint32_t n, int d)
    : alphabet_(Objective::parity(d)), tree_(n, static_cast<std::uint32_t>((d + 1) / 2))
{
    if (n < 1 || d < 1) throw UsageError("parity separator needs n >= 1 and d >= 1");
}

std::optional<StateId>
ParityTreeAutomaton::step(StateId q, ColorView c) const
{
    const auto p = static_cast<std::uint32_t>(c[0]);
    if (p == 0) return q;
    const std::uint32_t j = (p + 1) / 2;
    const std::uint32_t h = tree_.height();
    if (p % 2 == 1) {
        const auto [first, last] = tree_.block(q, h - j + 1);
        if (last < tree_.leaf_count()) return last;
        return std::nullopt;
    }
    return tree_.block(q, h - j).first;
}

std::string
ParityTreeAutomaton::state_label(StateId q) const
{
    std::string out = "(";
    const auto tuple = tree_.leaf(q);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

CounterAutomaton::CounterAutomaton(std::uint32_t n, int N)
    : alphabet_(Objective::mean_payoff(N)), top_(static_cast<StateId>(n - 1) * static_cast<StateId>(N))
{
    if (n < 1) throw UsageError("mp separator needs n >= 1");
}

UniversalTree
universal_tree(std::uint32_t n, std::uint32_t height)
{
    return UniversalTree(n, height);
}

SafetyAutomaton
parity_separator(std::uint32_t n, int d)
{
    return SafetyAutomaton(std::make_shared<ParityTreeAutomaton>(n, d));
}

SafetyAutomaton
mp_separator(std::uint32_t n, int N)
{
    return SafetyAutomaton(std::make_shared<CounterAutomaton>(n, N));
}

std::uint32_t
ceil_log2(std::uint64_t n)
{
    std::uint32_t k = 0;
    while ((std::uint64_t{1} << k) < n) ++k;
    return k;
}

std::uint64_t
binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const auto factor = n - k + i;
        if (result > std::numeric_limits<std::uint64_t>::max() / factor) throw GuardExceeded("binomial overflow");
        result = result * factor / i;
    }
    return result;
}

std::uint64_t
parity_size_bound(std::uint32_t n, int d)
{
    const std::uint64_t lg = ceil_log2(n);
    const std::uint64_t h = static_cast<std::uint64_t>((d + 1) / 2);
    if (h == 0) return lg == 0 ? n : 0;
    return n * binomial(lg + h - 1, lg);
}

std::uint64_t
mp_separator_size(std::uint32_t n, int N)
{
    return static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(N) + 1;
}

} // namespace sepgame
