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
 * <A_1, ..., A_p>: runs A_1 until its transition is undefined, then moves to
 * the initial state of A_2 on that letter, and so on; undefined in A_p is
 * undefined. States are the disjoint union, numbered part by part.
 *
 * Nested folds are flattened: the product is associative, and a flat part
 * list keeps delta at one binary search instead of a recursion per level.
 */
class SequentialFold final : public AutomatonImpl
{
  public:
    explicit SequentialFold(const std::vector<SafetyAutomaton>& parts);

    const Objective& alphabet() const override { return parts_.front().alphabet(); }
    StateId state_count() const override { return offsets_.back(); }
    StateId initial() const override { return offsets_.front() + parts_.front().initial(); }
    std::optional<StateId> step(StateId q, ColorView c) const override;
    std::string state_label(StateId q) const override;

    std::size_t part_count() const { return parts_.size(); }
    const SafetyAutomaton& part(std::size_t i) const { return parts_[i]; }
    StateId offset(std::size_t i) const { return offsets_[i]; }
    std::size_t part_of(StateId q) const;

  private:
    std::vector<SafetyAutomaton> parts_;
    std::vector<StateId> offsets_;
};

SafetyAutomaton sequential_product(const SafetyAutomaton& a1, const SafetyAutomaton& a2);

/** Left fold of sequential_product; a single automaton is returned unchanged. */
SafetyAutomaton sequential_fold(const std::vector<SafetyAutomaton>& automata);

} // namespace sepgame
