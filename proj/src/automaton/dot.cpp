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

#include "sepgame/automaton/dot.hpp"

#include <map>
#include <sstream>

#include "sepgame/automaton/pair_index.hpp"
#include "sepgame/errors.hpp"

namespace sepgame {

namespace {

std::string
escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string
letter_text(ColorView c)
{
    if (c.empty()) return "ε";
    if (c.size() == 1) return std::to_string(c[0]);
    return color_to_string(c);
}

} // namespace

std::string
automaton_to_dot(const SafetyAutomaton& aut, std::size_t max_states)
{
    const auto letters = aut.alphabet().letters();
    detail::PairIndex index(1, aut.state_count());
    std::vector<StateId> states{aut.initial()};
    index.insert(0, aut.initial(), 0);

    std::ostringstream body;
    bool bottom = false;
    for (std::size_t head = 0; head < states.size(); ++head) {
        // target node id (-1 for bottom) -> merged label, in first-seen order
        std::vector<std::pair<std::int64_t, std::string>> grouped;
        std::map<std::int64_t, std::size_t> slot;
        for (const auto& c : letters) {
            std::int64_t to = -1;
            if (auto next = aut.delta(states[head], c)) {
                auto [id, inserted] = index.insert(0, *next, static_cast<std::uint32_t>(states.size()));
                if (inserted) {
                    if (states.size() >= max_states)
                        throw GuardExceeded("automaton too large for DOT export");
                    states.push_back(*next);
                }
                to = id;
            } else {
                bottom = true;
            }
            auto [it, fresh] = slot.try_emplace(to, grouped.size());
            if (fresh) grouped.emplace_back(to, letter_text(c));
            else grouped[it->second].second += "," + letter_text(c);
        }
        for (const auto& [to, label] : grouped) {
            body << "  s" << head << " -> " << (to < 0 ? std::string("bot") : "s" + std::to_string(to))
                 << " [label=\"" << escape(label) << "\"];\n";
        }
    }

    std::ostringstream out;
    out << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n  init -> s0;\n";
    for (std::size_t i = 0; i < states.size(); ++i)
        out << "  s" << i << " [shape=circle, label=\"" << escape(aut.state_label(states[i])) << "\"];\n";
    if (bottom) out << "  bot [shape=doubleoctagon, label=\"⊥\"];\n";
    out << body.str() << "}\n";
    return out.str();
}

std::string
chained_game_to_dot(const ChainedGame& chained, const SafetyAutomaton& aut)
{
    const auto& g = chained.game().graph();
    std::ostringstream out;
    out << "digraph chained {\n";
    for (VertexId p = 0; p < g.vertex_count(); ++p) {
        if (p == chained.bottom()) {
            out << "  p" << p << " [shape=doubleoctagon, label=\"⊥\"];\n";
            continue;
        }
        const auto [v, q] = chained.pair_of(p);
        const char* shape = chained.game().owner(p) == Player::Adam ? "box" : "ellipse";
        out << "  p" << p << " [shape=" << shape << ", label=\"(" << v << ", "
            << escape(aut.state_label(q)) << ")\"];\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) out << "  p" << g.source(e) << " -> p" << g.target(e) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace sepgame
