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

#include "sepgame/automaton/table_automaton.hpp"

#include "sepgame/errors.hpp"

namespace sepgame {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 26;

} // namespace

TableAutomaton::TableAutomaton(Objective alphabet, StateId state_count, StateId initial)
    : alphabet_(alphabet), state_count_(state_count), initial_(initial), letters_(alphabet.letter_count())
{
    if (state_count == 0 || initial >= state_count) throw UsageError("table automaton initial state out of range");
    if (letters_ > kTableLimit / state_count) throw GuardExceeded("transition table too large");
    table_.assign(state_count * letters_, kUndefined);
}

void
TableAutomaton::set(StateId q, ColorView c, StateId target)
{
    if (q >= state_count_ || target >= state_count_) throw UsageError("table transition state out of range");
    if (auto problem = alphabet_.check(c)) throw UsageError("table transition letter: " + *problem);
    table_[q * letters_ + alphabet_.letter_index(c)] = target;
}

void
TableAutomaton::set_all(StateId q, StateId target)
{
    if (q >= state_count_ || target >= state_count_) throw UsageError("table transition state out of range");
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(q * letters_), letters_, target);
}

std::optional<StateId>
TableAutomaton::step(StateId q, ColorView c) const
{
    const auto target = table_[q * letters_ + alphabet_.letter_index(c)];
    if (target == kUndefined) return std::nullopt;
    return target;
}

SafetyAutomaton
tabulate(const SafetyAutomaton& aut)
{
    auto table = std::make_shared<TableAutomaton>(aut.alphabet(), aut.state_count(), aut.initial());
    const auto letters = aut.alphabet().letters();
    for (StateId q = 0; q < aut.state_count(); ++q) {
        for (const auto& c : letters) {
            if (auto next = aut.delta(q, c)) table->set(q, c, *next);
        }
    }
    return SafetyAutomaton(std::move(table));
}

SafetyAutomaton
trivial_automaton(const Objective& alphabet)
{
    auto table = std::make_shared<TableAutomaton>(alphabet, 1, 0);
    table->set_all(0, 0);
    return SafetyAutomaton(std::move(table));
}

} // namespace sepgame
