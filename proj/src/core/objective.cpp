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

#include "sepgame/core/objective.hpp"

#include <limits>

#include "sepgame/errors.hpp"

namespace sepgame {

namespace {

void
require(bool ok, const char* what)
{
    if (!ok) throw UsageError(what);
}

} // namespace

Objective
Objective::safety()
{
    return {ObjectiveKind::Safety, 0, 0};
}

Objective
Objective::parity(int d)
{
    require(d >= 0, "parity objective needs d >= 0");
    return {ObjectiveKind::Parity, d, 0};
}

Objective
Objective::mean_payoff(int N)
{
    require(N >= 0, "mean payoff objective needs N >= 0");
    return {ObjectiveKind::MeanPayoff, 0, N};
}

Objective
Objective::parity_or_mp(int d, int N)
{
    require(d >= 0 && N >= 0, "parity-mp objective needs d >= 0 and N >= 0");
    return {ObjectiveKind::ParityOrMP, d, N};
}

Objective
Objective::disj_mp(int d, int N)
{
    require(d >= 1 && N >= 0, "disj-mp objective needs d >= 1 and N >= 0");
    return {ObjectiveKind::DisjMP, d, N};
}

std::size_t
Objective::arity() const
{
    switch (kind) {
    case ObjectiveKind::Safety: return 0;
    case ObjectiveKind::Parity: return 1;
    case ObjectiveKind::MeanPayoff: return 1;
    case ObjectiveKind::ParityOrMP: return 2;
    case ObjectiveKind::DisjMP: return static_cast<std::size_t>(d);
    }
    return 0;
}

std::optional<std::string>
Objective::check(ColorView c) const
{
    if (c.size() != arity()) {
        return "expected " + std::to_string(arity()) + " colour component(s), got " +
               std::to_string(c.size());
    }
    auto priority_ok = [&](std::int32_t p) -> std::optional<std::string> {
        if (p < 0) return "priority " + std::to_string(p) + " is negative";
        if (p > d) return "priority " + std::to_string(p) + " exceeds d=" + std::to_string(d);
        return std::nullopt;
    };
    auto weight_ok = [&](std::int32_t w) -> std::optional<std::string> {
        if (w < -N || w > N) {
            return "weight " + std::to_string(w) + " outside [-" + std::to_string(N) + "," +
                   std::to_string(N) + "]";
        }
        return std::nullopt;
    };
    switch (kind) {
    case ObjectiveKind::Safety: return std::nullopt;
    case ObjectiveKind::Parity: return priority_ok(c[0]);
    case ObjectiveKind::MeanPayoff: return weight_ok(c[0]);
    case ObjectiveKind::ParityOrMP:
        if (auto e = priority_ok(c[0])) return e;
        return weight_ok(c[1]);
    case ObjectiveKind::DisjMP:
        for (auto w : c) {
            if (auto e = weight_ok(w)) return e;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

bool
Objective::subsumes(const Objective& other) const
{
    if (kind != other.kind) return false;
    switch (kind) {
    case ObjectiveKind::Safety: return true;
    case ObjectiveKind::Parity: return other.d <= d;
    case ObjectiveKind::MeanPayoff: return other.N <= N;
    case ObjectiveKind::ParityOrMP: return other.d <= d && other.N <= N;
    case ObjectiveKind::DisjMP: return other.d == d && other.N <= N;
    }
    return false;
}

std::uint64_t
Objective::letter_count() const
{
    const std::uint64_t priorities = static_cast<std::uint64_t>(d) + 1;
    const std::uint64_t weights = 2 * static_cast<std::uint64_t>(N) + 1;
    switch (kind) {
    case ObjectiveKind::Safety: return 1;
    case ObjectiveKind::Parity: return priorities;
    case ObjectiveKind::MeanPayoff: return weights;
    case ObjectiveKind::ParityOrMP: return priorities * weights;
    case ObjectiveKind::DisjMP: {
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) {
            if (total > std::numeric_limits<std::uint64_t>::max() / weights)
                return std::numeric_limits<std::uint64_t>::max();
            total *= weights;
        }
        return total;
    }
    }
    return 0;
}

// Layout: component 0 is the most significant digit.
std::uint64_t
Objective::letter_index(ColorView c) const
{
    const std::uint64_t weights = 2 * static_cast<std::uint64_t>(N) + 1;
    switch (kind) {
    case ObjectiveKind::Safety: return 0;
    case ObjectiveKind::Parity: return static_cast<std::uint64_t>(c[0]);
    case ObjectiveKind::MeanPayoff: return static_cast<std::uint64_t>(c[0] + N);
    case ObjectiveKind::ParityOrMP:
        return static_cast<std::uint64_t>(c[0]) * weights + static_cast<std::uint64_t>(c[1] + N);
    case ObjectiveKind::DisjMP: {
        std::uint64_t index = 0;
        for (auto w : c) index = index * weights + static_cast<std::uint64_t>(w + N);
        return index;
    }
    }
    return 0;
}

Color
Objective::letter(std::uint64_t index) const
{
    const std::uint64_t weights = 2 * static_cast<std::uint64_t>(N) + 1;
    auto weight = [&](std::uint64_t digit) { return static_cast<std::int32_t>(digit) - N; };
    switch (kind) {
    case ObjectiveKind::Safety: return {};
    case ObjectiveKind::Parity: return {static_cast<std::int32_t>(index)};
    case ObjectiveKind::MeanPayoff: return {weight(index)};
    case ObjectiveKind::ParityOrMP:
        return {static_cast<std::int32_t>(index / weights), weight(index % weights)};
    case ObjectiveKind::DisjMP: {
        Color c(static_cast<std::size_t>(d));
        for (std::size_t i = c.size(); i-- > 0;) {
            c[i] = weight(index % weights);
            index /= weights;
        }
        return c;
    }
    }
    return {};
}

std::vector<Color>
Objective::letters() const
{
    const auto count = letter_count();
    if (count > (std::uint64_t{1} << 24)) throw GuardExceeded("alphabet too large to enumerate");
    std::vector<Color> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(letter(i));
    return out;
}

std::optional<std::size_t>
Objective::priority_slot() const
{
    if (kind == ObjectiveKind::Parity || kind == ObjectiveKind::ParityOrMP) return 0;
    return std::nullopt;
}

std::size_t
Objective::weight_slot(std::optional<int> dimension) const
{
    switch (kind) {
    case ObjectiveKind::MeanPayoff:
        if (dimension.value_or(0) != 0) throw UsageError("mp colours have a single weight");
        return 0;
    case ObjectiveKind::ParityOrMP:
        if (dimension.value_or(0) != 0) throw UsageError("parity-mp colours have a single weight");
        return 1;
    case ObjectiveKind::DisjMP:
        if (!dimension || *dimension < 0 || *dimension >= d)
            throw UsageError("disj-mp weight needs a dimension in [0,d)");
        return static_cast<std::size_t>(*dimension);
    default: throw UsageError("objective " + to_string() + " has no weights");
    }
}

std::string
Objective::to_string() const
{
    switch (kind) {
    case ObjectiveKind::Safety: return "safety";
    case ObjectiveKind::Parity: return "parity " + std::to_string(d);
    case ObjectiveKind::MeanPayoff: return "mp " + std::to_string(N);
    case ObjectiveKind::ParityOrMP: return "parity-mp " + std::to_string(d) + " " + std::to_string(N);
    case ObjectiveKind::DisjMP: return "disj-mp " + std::to_string(d) + " " + std::to_string(N);
    }
    return "?";
}

std::string
color_to_string(ColorView c)
{
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

} // namespace sepgame
