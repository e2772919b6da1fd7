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

#include "sepgame/combos/combos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "sepgame/automaton/sequential.hpp"
#include "sepgame/errors.hpp"
#include "sepgame/separators/separators.hpp"

namespace sepgame {

ParityMpAutomaton::ParityMpAutomaton(SafetyAutomaton parity, SafetyAutomaton mean_payoff, int d,
                                     int initial_priority)
    : parity_(std::move(parity)), mean_payoff_(std::move(mean_payoff)), d_(d)
{
    if (!parity_.alphabet().subsumes(Objective::parity(d)))
        throw UsageError("parity component must read priorities [0," + std::to_string(d) + "]");
    if (mean_payoff_.alphabet().kind != ObjectiveKind::MeanPayoff)
        throw UsageError("mean payoff component must read single weights");
    if (initial_priority < 0 || initial_priority > d) throw UsageError("initial priority outside [0,d]");
    alphabet_ = Objective::parity_or_mp(d, mean_payoff_.alphabet().N);

    const StateId width = static_cast<StateId>(d) + 1;
    const StateId qp = parity_.state_count();
    const StateId qmp = mean_payoff_.state_count();
    if (qp > std::numeric_limits<StateId>::max() / qmp || qp * qmp > std::numeric_limits<StateId>::max() / width)
        throw GuardExceeded("parity-mp state space exceeds 2^64");
    state_count_ = qp * qmp * width;
    initial_ = encode({initial_priority, parity_.initial(), mean_payoff_.initial()});
}

ParityMpAutomaton::Parts
ParityMpAutomaton::decode(StateId q) const
{
    const StateId width = static_cast<StateId>(d_) + 1;
    const StateId rest = q / width;
    return {static_cast<int>(q % width), rest / mean_payoff_.state_count(), rest % mean_payoff_.state_count()};
}

StateId
ParityMpAutomaton::encode(const Parts& parts) const
{
    const StateId width = static_cast<StateId>(d_) + 1;
    return (parts.parity_state * mean_payoff_.state_count() + parts.mp_state) * width +
           static_cast<StateId>(parts.priority);
}

std::optional<StateId>
ParityMpAutomaton::step(StateId q, ColorView c) const
{
    const auto s = decode(q);
    const int top = std::max(s.priority, static_cast<int>(c[0]));
    if (auto next = mean_payoff_.delta(s.mp_state, c.subspan(1, 1))) return encode({top, s.parity_state, *next});
    const std::int32_t fed[] = {top};
    if (auto next = parity_.delta(s.parity_state, fed)) return encode({0, *next, mean_payoff_.initial()});
    return std::nullopt;
}

std::string
ParityMpAutomaton::state_label(StateId q) const
{
    const auto s = decode(q);
    return "(" + std::to_string(s.priority) + "," + parity_.state_label(s.parity_state) + "," +
           mean_payoff_.state_label(s.mp_state) + ")";
}

ComponentLift::ComponentLift(SafetyAutomaton inner, int d, int component)
    : alphabet_(Objective::disj_mp(d, inner.alphabet().N)), inner_(std::move(inner)), component_(component)
{
    if (inner_.alphabet().kind != ObjectiveKind::MeanPayoff) throw UsageError("only weight automata can be lifted");
    if (component < 0 || component >= d) throw UsageError("lifted component outside [0,d)");
}

std::string
ComponentLift::state_label(StateId q) const
{
    return "w" + std::to_string(component_ + 1) + "=" + inner_.state_label(q);
}

SafetyAutomaton
parity_mp_separator(const SafetyAutomaton& parity, const SafetyAutomaton& mean_payoff, int d, int initial_priority)
{
    return SafetyAutomaton(std::make_shared<ParityMpAutomaton>(parity, mean_payoff, d, initial_priority));
}

SafetyAutomaton
naive_general_separator(const SafetyAutomaton& aut, std::uint32_t n)
{
    if (n < 1) throw UsageError("naive separator needs n >= 1");
    return sequential_fold(std::vector<SafetyAutomaton>(n, aut));
}

SafetyAutomaton
lift_to_component(const SafetyAutomaton& mean_payoff, int d, int component)
{
    return SafetyAutomaton(std::make_shared<ComponentLift>(mean_payoff, d, component));
}

SafetyAutomaton
disjmp_scc_separator(std::uint32_t k, int d, int N)
{
    if (d < 1) throw UsageError("disj-mp separator needs d >= 1");
    const auto counter = mp_separator(k, N);
    if (d == 1) return lift_to_component(counter, 1, 0);
    std::vector<SafetyAutomaton> copies;
    copies.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) copies.push_back(lift_to_component(counter, d, i));
    return sequential_fold(copies);
}

SafetyAutomaton
disjmp_separator(std::uint32_t n, int d, int N)
{
    if (n < 1) throw UsageError("disj-mp separator needs n >= 1");
    std::map<std::uint32_t, SafetyAutomaton> by_size;
    std::vector<SafetyAutomaton> blocks;
    const auto u = universal_sequence(n);
    blocks.reserve(u.length());
    for (auto x : u.values) {
        auto it = by_size.find(x);
        if (it == by_size.end()) it = by_size.emplace(x, disjmp_scc_separator(x, d, N)).first;
        blocks.push_back(it->second);
    }
    return sequential_fold(blocks);
}

std::uint64_t
disjmp_separator_size(std::uint32_t n, int d, int N)
{
    std::uint64_t total = 0;
    for (auto x : universal_sequence(n).values) total += static_cast<std::uint64_t>(d) * mp_separator_size(x, N);
    return total;
}

double
disjmp_size_ratio(std::uint64_t states, std::uint32_t n, int d, int N)
{
    return static_cast<double>(states) / (n * std::log2(n + 1.0) * d * N);
}

} // namespace sepgame
