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

#include <vector>

#include "sepgame/automaton/automaton.hpp"

namespace sepgame {

/**
 * Explicit transition table indexed by (state, letter index). Used for small
 * hand-built automata and as a memoizing backend for generated ones.
 */
class TableAutomaton final : public AutomatonImpl
{
  public:
    TableAutomaton(Objective alphabet, StateId state_count, StateId initial);

    /** Defines delta(q, c) = target, overwriting any previous value. */
    void set(StateId q, ColorView c, StateId target);
    /** Defines delta(q, c) = q' for every letter c. */
    void set_all(StateId q, StateId target);

    const Objective& alphabet() const override { return alphabet_; }
    StateId state_count() const override { return state_count_; }
    StateId initial() const override { return initial_; }
    std::optional<StateId> step(StateId q, ColorView c) const override;

  private:
    static constexpr StateId kUndefined = ~StateId{0};

    Objective alphabet_;
    StateId state_count_;
    StateId initial_;
    std::uint64_t letters_;
    std::vector<StateId> table_;
};

/** Memoized copy of aut with the same states and transitions. */
SafetyAutomaton tabulate(const SafetyAutomaton& aut);

/** One state, total self-loop: the separating automaton of safety objectives. */
SafetyAutomaton trivial_automaton(const Objective& alphabet);

} // namespace sepgame
