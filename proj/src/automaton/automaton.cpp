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

#include "sepgame/automaton/automaton.hpp"

#include <algorithm>

#include "sepgame/automaton/pair_index.hpp"
#include "sepgame/errors.hpp"

namespace sepgame {

SafetyAutomaton::SafetyAutomaton(std::shared_ptr<const AutomatonImpl> impl) : impl_(std::move(impl))
{
    if (!impl_) throw UsageError("null automaton");
    if (impl_->state_count() == 0 || impl_->initial() >= impl_->state_count())
        throw InvariantViolation("automaton initial state out of range");
}

std::optional<StateId>
run_from(const SafetyAutomaton& aut, StateId q, std::span<const Color> word)
{
    if (q >= aut.state_count()) throw UsageError("run from a state outside the automaton");
    for (const auto& letter : word) {
        if (auto problem = aut.alphabet().check(letter)) {
            throw UsageError("letter " + color_to_string(letter) + " is not in the alphabet " +
                             aut.alphabet().to_string() + ": " + *problem);
        }
        auto next = aut.delta(q, letter);
        if (!next) return std::nullopt;
        q = *next;
    }
    return q;
}

std::optional<StateId>
run(const SafetyAutomaton& aut, std::span<const Color> word)
{
    return run_from(aut, aut.initial(), word);
}

std::optional<FinitePath>
find_rejected_path(const SafetyAutomaton& aut, const Graph& g)
{
    if (!aut.alphabet().subsumes(g.alphabet())) {
        throw UsageError("automaton alphabet " + aut.alphabet().to_string() +
                         " does not cover graph colours " + g.alphabet().to_string());
    }
    struct Node
    {
        VertexId v;
        StateId q;
        std::uint32_t parent;
        EdgeId via;
    };
    constexpr std::uint32_t kRoot = detail::PairIndex::kAbsent;

    detail::PairIndex index(g.vertex_count(), aut.state_count());
    std::vector<Node> nodes;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (index.insert(v, aut.initial(), static_cast<std::uint32_t>(nodes.size())).second)
            nodes.push_back({v, aut.initial(), kRoot, 0});
    }

    auto path_to = [&](std::uint32_t node, EdgeId last) {
        FinitePath path;
        path.edges.push_back(last);
        while (nodes[node].parent != kRoot) {
            path.edges.push_back(nodes[node].via);
            node = nodes[node].parent;
        }
        path.start = nodes[node].v;
        std::reverse(path.edges.begin(), path.edges.end());
        return path;
    };

    for (std::uint32_t head = 0; head < nodes.size(); ++head) {
        const VertexId v = nodes[head].v;
        const StateId q = nodes[head].q;
        for (auto e : g.out_edges(v)) {
            auto next = aut.delta(q, g.color(e));
            if (!next) return path_to(head, e);
            const auto fresh = static_cast<std::uint32_t>(nodes.size());
            if (index.insert(g.target(e), *next, fresh).second)
                nodes.push_back({g.target(e), *next, head, e});
        }
    }
    return std::nullopt;
}

bool
accepts_all_paths(const SafetyAutomaton& aut, const Graph& g)
{
    return !find_rejected_path(aut, g).has_value();
}

ReachableAutomaton
reachable_automaton(const SafetyAutomaton& aut, std::size_t max_states)
{
    const auto letters = aut.alphabet().letters();
    ReachableAutomaton out;
    detail::PairIndex index(1, aut.state_count());
    index.insert(0, aut.initial(), 0);
    out.state.push_back(aut.initial());

    struct Edge
    {
        VertexId src, dst;
        std::uint64_t letter;
    };
    std::vector<Edge> edges;
    for (std::size_t head = 0; head < out.state.size(); ++head) {
        for (std::uint64_t l = 0; l < letters.size(); ++l) {
            auto next = aut.delta(out.state[head], letters[l]);
            if (!next) continue;
            auto [id, inserted] = index.insert(0, *next, static_cast<std::uint32_t>(out.state.size()));
            if (inserted) {
                if (out.state.size() >= max_states)
                    throw GuardExceeded("automaton has more than " + std::to_string(max_states) + " reachable states");
                out.state.push_back(*next);
            }
            edges.push_back({static_cast<VertexId>(head), id, l});
        }
    }
    GraphBuilder builder(out.state.size(), aut.alphabet(), GraphBuilder::Duplicates::Allow);
    builder.reserve(edges.size());
    for (const auto& e : edges) builder.add_edge(e.src, e.dst, letters[e.letter]);
    out.graph = std::move(builder).build();
    return out;
}

} // namespace sepgame
