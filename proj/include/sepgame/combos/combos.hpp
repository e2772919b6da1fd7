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

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/combos/universal_sequence.hpp"

namespace sepgame {

/**
 * Separating automaton for Parity_d or MP_N over pairs (p, w).
 *
 * A state (acc, qP, qMP) simulates A_MP on the weights while acc records the
 * largest priority read since the last reset. When A_MP gets stuck the
 * automaton resets: A_P reads max(acc, p), the accumulator drops to 0 and A_MP
 * restarts from its initial state; the weight of that letter is discarded.
 * The run is stuck only when A_P is.
 *
 * States are encoded as (qP * |Q_MP| + qMP) * (d + 1) + acc.
 */
class ParityMpAutomaton final : public AutomatonImpl
{
  public:
    ParityMpAutomaton(SafetyAutomaton parity, SafetyAutomaton mean_payoff, int d, int initial_priority);

    const Objective& alphabet() const override { return alphabet_; }
    StateId state_count() const override { return state_count_; }
    StateId initial() const override { return initial_; }
    std::optional<StateId> step(StateId q, ColorView c) const override;
    std::string state_label(StateId q) const override;

    struct Parts
    {
        int priority;
        StateId parity_state;
        StateId mp_state;
    };
    Parts decode(StateId q) const;
    StateId encode(const Parts& parts) const;

  private:
    Objective alphabet_;
    SafetyAutomaton parity_;
    SafetyAutomaton mean_payoff_;
    int d_;
    StateId state_count_;
    StateId initial_;
};

/**
 * Reads component `component` (0-based) of disj-mp letters and feeds it to an
 * automaton over single weights.
 */
class ComponentLift final : public AutomatonImpl
{
  public:
    ComponentLift(SafetyAutomaton inner, int d, int component);

    const Objective& alphabet() const override { return alphabet_; }
    StateId state_count() const override { return inner_.state_count(); }
    StateId initial() const override { return inner_.initial(); }
    std::optional<StateId> step(StateId q, ColorView c) const override
    {
        return inner_.delta(q, c.subspan(static_cast<std::size_t>(component_), 1));
    }
    std::string state_label(StateId q) const override;

  private:
    Objective alphabet_;
    SafetyAutomaton inner_;
    int component_;
};

/**
 * (n, Parity_d or MP_N)-separating automaton from an (n, Parity_d)- and an
 * (n, MP_N)-separating one. The accumulator starts at initial_priority
 * (default 0).
 */
SafetyAutomaton parity_mp_separator(const SafetyAutomaton& parity, const SafetyAutomaton& mean_payoff, int d,
                                    int initial_priority = 0);

/** <A, ..., A> with n copies. */
SafetyAutomaton naive_general_separator(const SafetyAutomaton& aut, std::uint32_t n);

SafetyAutomaton lift_to_component(const SafetyAutomaton& mean_payoff, int d, int component);

/**
 * Separating automaton for disjunctions of d mean payoff objectives on
 * strongly connected graphs with at most k vertices: the sequential product
 * of d counters for k vertices, copy i reading component i.
 */
SafetyAutomaton disjmp_scc_separator(std::uint32_t k, int d, int N);

/** Sequential product of disjmp_scc_separator(x, d, N) for x along u_n. */
SafetyAutomaton disjmp_separator(std::uint32_t n, int d, int N);

/** Sum over x in u_n of d * ((x - 1) N + 1). */
std::uint64_t disjmp_separator_size(std::uint32_t n, int d, int N);

/** states / (n * log2(n + 1) * d * N); kUniversalSizeConstant bounds it when N >= 1. */
double disjmp_size_ratio(std::uint64_t states, std::uint32_t n, int d, int N);

} // namespace sepgame
