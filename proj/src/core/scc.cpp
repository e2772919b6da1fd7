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

#include "sepgame/core/scc.hpp"

#include <algorithm>
#include <limits>

namespace sepgame {

SccIndex
scc_index(const Graph& g, const std::vector<bool>& edge_mask)
{
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.vertex_count();
    const bool masked = !edge_mask.empty();

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    // emitted in reverse topological order, renumbered at the end
    std::vector<std::uint32_t> reverse_id(n, kUnvisited);
    std::uint32_t emitted = 0;
    std::uint32_t counter = 0;

    struct Frame
    {
        VertexId v;
        EdgeId next;
    };
    std::vector<Frame> calls;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        calls.push_back({root, *g.out_edges(root).begin()});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!calls.empty()) {
            auto& frame = calls.back();
            const VertexId v = frame.v;
            const EdgeId end = *g.out_edges(v).end();
            bool descended = false;
            while (frame.next < end) {
                const EdgeId e = frame.next++;
                if (masked && !edge_mask[e]) continue;
                const VertexId w = g.target(e);
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, *g.out_edges(w).begin()});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;

            if (low[v] == index[v]) {
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    reverse_id[w] = emitted;
                } while (w != v);
                ++emitted;
            }
            calls.pop_back();
            if (!calls.empty()) {
                const VertexId parent = calls.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }

    SccIndex out;
    out.count = emitted;
    out.component_of.resize(n);
    for (VertexId v = 0; v < n; ++v) out.component_of[v] = emitted - 1 - reverse_id[v];
    return out;
}

std::vector<std::vector<VertexId>>
scc_decompose(const Graph& g, const std::vector<bool>& edge_mask)
{
    const auto idx = scc_index(g, edge_mask);
    std::vector<std::vector<VertexId>> components(idx.count);
    for (VertexId v = 0; v < g.vertex_count(); ++v) components[idx.component_of[v]].push_back(v);
    return components;
}

} // namespace sepgame
