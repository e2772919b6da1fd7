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

#include "sepgame/core/cycles.hpp"

#include <algorithm>

#include "sepgame/core/scc.hpp"
#include "sepgame/errors.hpp"

namespace sepgame {

namespace {

// Bellman-Ford from a virtual source linked to every vertex of one SCC.
std::optional<Lasso>
negative_cycle_in_component(const Graph& g, const std::vector<VertexId>& vertices,
                            const std::vector<EdgeId>& edges, std::size_t slot,
                            std::vector<std::int64_t>& dist, std::vector<EdgeId>& pred)
{
    constexpr EdgeId kNone = ~EdgeId{0};
    for (auto v : vertices) {
        dist[v] = 0;
        pred[v] = kNone;
    }
    VertexId relaxed = 0;
    bool changed = true;
    for (std::size_t round = 0; round <= vertices.size() && changed; ++round) {
        changed = false;
        for (auto e : edges) {
            const auto candidate = dist[g.source(e)] + g.component(e, slot);
            if (candidate < dist[g.target(e)]) {
                dist[g.target(e)] = candidate;
                pred[g.target(e)] = e;
                relaxed = g.target(e);
                changed = true;
            }
        }
    }
    if (!changed) return std::nullopt;

    // Every cycle of the predecessor graph is negative; one exists now.
    std::vector<std::uint32_t> walk_id(vertices.size());
    auto local = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    std::fill(walk_id.begin(), walk_id.end(), 0);
    std::uint32_t walk = 0;
    std::optional<VertexId> on_cycle;
    for (VertexId seed = relaxed; !on_cycle;) {
        ++walk;
        VertexId at = seed;
        while (pred[at] != kNone && walk_id[local(at)] == 0) {
            walk_id[local(at)] = walk;
            at = g.source(pred[at]);
        }
        if (pred[at] != kNone && walk_id[local(at)] == walk) {
            on_cycle = at;
            break;
        }
        auto next = std::find_if(vertices.begin(), vertices.end(),
                                 [&](VertexId v) { return walk_id[local(v)] == 0 && pred[v] != kNone; });
        if (next == vertices.end()) return std::nullopt;
        seed = *next;
    }

    Lasso lasso;
    lasso.start = *on_cycle;
    VertexId at = *on_cycle;
    do {
        const EdgeId e = pred[at];
        lasso.cycle.push_back(e);
        at = g.source(e);
    } while (at != *on_cycle);
    std::reverse(lasso.cycle.begin(), lasso.cycle.end());
    return lasso;
}

std::size_t
resolve_slot(const Graph& g, std::optional<int> dimension)
{
    return g.alphabet().weight_slot(dimension);
}

} // namespace

std::optional<Lasso>
find_negative_cycle(const Graph& g, const std::vector<bool>& edge_mask, std::size_t slot)
{
    const auto idx = scc_index(g, edge_mask);
    std::vector<std::vector<VertexId>> vertices(idx.count);
    std::vector<std::vector<EdgeId>> internal(idx.count);
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertices[idx.component_of[v]].push_back(v);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!edge_mask.empty() && !edge_mask[e]) continue;
        const auto c = idx.component_of[g.source(e)];
        if (c == idx.component_of[g.target(e)]) internal[c].push_back(e);
    }

    std::vector<std::int64_t> dist(g.vertex_count(), 0);
    std::vector<EdgeId> pred(g.vertex_count(), 0);
    for (std::size_t c = 0; c < idx.count; ++c) {
        if (internal[c].empty()) continue;
        if (auto cycle = negative_cycle_in_component(g, vertices[c], internal[c], slot, dist, pred))
            return cycle;
    }
    return std::nullopt;
}

std::optional<Lasso>
find_negative_cycle(const Graph& g, std::optional<int> dimension)
{
    return find_negative_cycle(g, {}, resolve_slot(g, dimension));
}

bool
graph_satisfies_mp(const Graph& g, std::optional<int> dimension)
{
    return !find_negative_cycle(g, dimension).has_value();
}

bool
graph_satisfies_parity(const Graph& g)
{
    const auto slot = g.alphabet().priority_slot();
    if (!slot) throw UsageError("graph_satisfies_parity needs priority colours");
    const int d = g.alphabet().d;
    std::vector<bool> mask(g.edge_count());
    for (int p = 1; p <= d; p += 2) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) mask[e] = g.component(e, *slot) <= p;
        const auto idx = scc_index(g, mask);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.component(e, *slot) == p && idx.component_of[g.source(e)] == idx.component_of[g.target(e)])
                return false;
        }
    }
    return true;
}

} // namespace sepgame
