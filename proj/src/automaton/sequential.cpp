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

#include "sepgame/automaton/sequential.hpp"

#include <algorithm>

#include "sepgame/errors.hpp"

namespace sepgame {

SequentialFold::SequentialFold(const std::vector<SafetyAutomaton>& parts)
{
    if (parts.empty()) throw UsageError("sequential product of no automata");
    for (const auto& a : parts) {
        if (!(a.alphabet() == parts.front().alphabet())) {
            throw UsageError("sequential product alphabet mismatch: " + a.alphabet().to_string() + " vs " +
                             parts.front().alphabet().to_string());
        }
        if (auto nested = dynamic_cast<const SequentialFold*>(&a.impl())) {
            parts_.insert(parts_.end(), nested->parts_.begin(), nested->parts_.end());
        } else {
            parts_.push_back(a);
        }
    }
    offsets_.reserve(parts_.size() + 1);
    offsets_.push_back(0);
    for (const auto& a : parts_) {
        if (a.state_count() > ~StateId{0} - offsets_.back()) throw GuardExceeded("sequential product too large");
        offsets_.push_back(offsets_.back() + a.state_count());
    }
}

std::size_t
SequentialFold::part_of(StateId q) const
{
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), q);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

std::optional<StateId>
SequentialFold::step(StateId q, ColorView c) const
{
    const auto k = part_of(q);
    if (auto next = parts_[k].delta(q - offsets_[k], c)) return offsets_[k] + *next;
    if (k + 1 < parts_.size()) return offsets_[k + 1] + parts_[k + 1].initial();
    return std::nullopt;
}

std::string
SequentialFold::state_label(StateId q) const
{
    const auto k = part_of(q);
    return std::to_string(k) + ":" + parts_[k].state_label(q - offsets_[k]);
}

SafetyAutomaton
sequential_product(const SafetyAutomaton& a1, const SafetyAutomaton& a2)
{
    return SafetyAutomaton(std::make_shared<SequentialFold>(std::vector<SafetyAutomaton>{a1, a2}));
}

SafetyAutomaton
sequential_fold(const std::vector<SafetyAutomaton>& automata)
{
    if (automata.empty()) throw UsageError("sequential fold of an empty list");
    if (automata.size() == 1) return automata.front();
    return SafetyAutomaton(std::make_shared<SequentialFold>(automata));
}

} // namespace sepgame
