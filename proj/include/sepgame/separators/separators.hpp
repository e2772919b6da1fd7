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

#include <algorithm>
#include <cstdint>
#include <memory>

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/separators/universal_tree.hpp"

namespace sepgame {

/**
 * Parity separator over priorities [0, d]: states are the leaves of
 * U(n, ceil(d/2)), the initial state is the smallest leaf. Reading p with
 * j = ceil(p/2) compares leaves on (x_h, ..., x_j) when p is odd and on
 * (x_h, ..., x_{j+1}) when p is even, and moves to the smallest leaf that is
 * strictly larger (odd p; undefined when there is none) or at least as large
 * (even p) on that truncation. Priority 0 is the identity and the largest
 * even priority resets to the smallest leaf.
 */
class ParityTreeAutomaton final : public AutomatonImpl
{
  public:
    ParityTreeAutomaton(std::uint32_t n, int d);

    const Objective& alphabet() const override { return alphabet_; }
    StateId state_count() const override { return tree_.leaf_count(); }
    StateId initial() const override { return 0; }
    std::optional<StateId> step(StateId q, ColorView c) const override;
    std::string state_label(StateId q) const override;

    const UniversalTree& tree() const { return tree_; }

  private:
    Objective alphabet_;
    UniversalTree tree_;
};

/**
 * Mean payoff separator over weights [-N, N]: a counter over [0, (n-1)N]
 * starting at the top, delta(q, w) = min(q + w, (n-1)N) when q + w >= 0.
 */
class CounterAutomaton final : public AutomatonImpl
{
  public:
    CounterAutomaton(std::uint32_t n, int N);

    const Objective& alphabet() const override { return alphabet_; }
    StateId state_count() const override { return top_ + 1; }
    StateId initial() const override { return top_; }
    std::optional<StateId> step(StateId q, ColorView c) const override
    {
        const auto next = static_cast<std::int64_t>(q) + c[0];
        if (next < 0) return std::nullopt;
        return std::min<StateId>(static_cast<StateId>(next), top_);
    }

  private:
    Objective alphabet_;
    StateId top_;
};

UniversalTree universal_tree(std::uint32_t n, std::uint32_t height);

/** (n, Parity_d)-separating automaton; n >= 1, d >= 1. */
SafetyAutomaton parity_separator(std::uint32_t n, int d);

/** (n, MP_N)-separating automaton with exactly (n-1)N + 1 states; n >= 1. */
SafetyAutomaton mp_separator(std::uint32_t n, int N);

/** ceil(log2(n)), with ceil_log2(1) = 0. */
std::uint32_t ceil_log2(std::uint64_t n);

/** Exact binomial coefficient; GuardExceeded on overflow. */
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/** n * binom(ceil(log2 n) + ceil(d/2) - 1, ceil(log2 n)). */
std::uint64_t parity_size_bound(std::uint32_t n, int d);

/** (n - 1) * N + 1. */
std::uint64_t mp_separator_size(std::uint32_t n, int N);

} // namespace sepgame
