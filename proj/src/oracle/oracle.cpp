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

#include "sepgame/oracle/oracle.hpp"

#include <algorithm>
#include <limits>

#include "sepgame/core/cycles.hpp"
#include "sepgame/core/scc.hpp"
#include "sepgame/core/strategy.hpp"
#include "sepgame/errors.hpp"

namespace sepgame {

bool
graph_satisfies_parity_or_mp(const Graph& g)
{
    const auto& alphabet = g.alphabet();
    if (alphabet.kind != ObjectiveKind::ParityOrMP) throw UsageError("expected parity-mp colours");
    const std::size_t ps = *alphabet.priority_slot();
    const std::size_t ws = alphabet.weight_slot();

    std::vector<bool> mask(g.edge_count());
    std::vector<bool> flagged;
    for (int p = 1; p <= alphabet.d; p += 2) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) mask[e] = g.component(e, ps) <= p;
        const auto idx = scc_index(g, mask);
        flagged.assign(idx.count, false);
        bool any = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto c = idx.component_of[g.source(e)];
            if (g.component(e, ps) == p && c == idx.component_of[g.target(e)]) any = flagged[c] = true;
        }
        if (!any) continue;
        // Cycles never leave an SCC, so one search over all flagged SCCs suffices.
        std::vector<bool> inside(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto c = idx.component_of[g.source(e)];
            inside[e] = mask[e] && flagged[c] && c == idx.component_of[g.target(e)];
        }
        if (find_negative_cycle(g, inside, ws)) return false;
    }
    return true;
}

bool
graph_satisfies_disjmp(const Graph& g)
{
    const auto& alphabet = g.alphabet();
    if (alphabet.kind != ObjectiveKind::DisjMP) throw UsageError("expected disj-mp colours");
    const auto idx = scc_index(g);
    std::vector<std::vector<EdgeId>> internal(idx.count);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto c = idx.component_of[g.source(e)];
        if (c == idx.component_of[g.target(e)]) internal[c].push_back(e);
    }
    std::vector<bool> mask(g.edge_count());
    for (std::size_t c = 0; c < idx.count; ++c) {
        if (internal[c].empty()) continue;
        std::fill(mask.begin(), mask.end(), false);
        for (auto e : internal[c]) mask[e] = true;
        bool safe_somewhere = false;
        for (int i = 0; i < alphabet.d && !safe_somewhere; ++i)
            safe_somewhere = !find_negative_cycle(g, mask, alphabet.weight_slot(i));
        if (!safe_somewhere) return false;
    }
    return true;
}

bool
graph_satisfies(const Graph& g)
{
    switch (g.alphabet().kind) {
    case ObjectiveKind::Safety:
        return true;
    case ObjectiveKind::Parity:
        return graph_satisfies_parity(g);
    case ObjectiveKind::MeanPayoff:
        return graph_satisfies_mp(g);
    case ObjectiveKind::ParityOrMP:
        return graph_satisfies_parity_or_mp(g);
    case ObjectiveKind::DisjMP:
        return graph_satisfies_disjmp(g);
    }
    return false;
}

namespace {

// Edge subset over a handful of local vertices, as weight matrices.
class SubsetView
{
  public:
    SubsetView(const Graph& g, std::uint32_t subset) : g_(g)
    {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!(subset >> e & 1u)) continue;
            edges_.push_back(e);
            local(g.source(e));
            local(g.target(e));
        }
    }

    const std::vector<EdgeId>& edges() const { return edges_; }

    bool strongly_connected() const
    {
        const std::size_t k = vertices_.size();
        std::vector<std::uint64_t> reach(k, 0);
        for (std::size_t i = 0; i < k; ++i) reach[i] = std::uint64_t{1} << i;
        for (auto e : edges_) reach[index(g_.source(e))] |= std::uint64_t{1} << index(g_.target(e));
        for (std::size_t via = 0; via < k; ++via) {
            for (std::size_t i = 0; i < k; ++i) {
                if (reach[i] >> via & 1u) reach[i] |= reach[via];
            }
        }
        const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        return std::all_of(reach.begin(), reach.end(), [&](std::uint64_t r) { return r == all; });
    }

    bool has_negative_cycle(std::size_t slot) const
    {
        constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
        constexpr std::int64_t kFloor = -kInf;
        const std::size_t k = vertices_.size();
        std::vector<std::int64_t> dist(k * k, kInf);
        for (auto e : edges_) {
            auto& cell = dist[index(g_.source(e)) * k + index(g_.target(e))];
            cell = std::min<std::int64_t>(cell, g_.component(e, slot));
        }
        for (std::size_t via = 0; via < k; ++via) {
            for (std::size_t i = 0; i < k; ++i) {
                const auto left = dist[i * k + via];
                if (left >= kInf) continue;
                for (std::size_t j = 0; j < k; ++j) {
                    const auto right = dist[via * k + j];
                    if (right >= kInf) continue;
                    // Clamping keeps values bounded without changing any sign.
                    const auto through = std::max(left + right, kFloor);
                    if (through < dist[i * k + j]) dist[i * k + j] = through;
                }
            }
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (dist[i * k + i] < 0) return true;
        }
        return false;
    }

  private:
    std::size_t index(VertexId v) const
    {
        return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
    }
    void local(VertexId v)
    {
        if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end()) vertices_.push_back(v);
    }

    const Graph& g_;
    std::vector<EdgeId> edges_;
    std::vector<VertexId> vertices_;
};

bool
subset_violates(const Graph& g, const SubsetView& s)
{
    const auto& alphabet = g.alphabet();
    auto top_priority = [&] {
        int top = 0;
        for (auto e : s.edges()) top = std::max<int>(top, g.component(e, *alphabet.priority_slot()));
        return top;
    };
    switch (alphabet.kind) {
    case ObjectiveKind::Safety:
        return false;
    case ObjectiveKind::Parity:
        return top_priority() % 2 == 1;
    case ObjectiveKind::MeanPayoff:
        return s.has_negative_cycle(alphabet.weight_slot());
    case ObjectiveKind::ParityOrMP:
        return top_priority() % 2 == 1 && s.has_negative_cycle(alphabet.weight_slot());
    case ObjectiveKind::DisjMP:
        for (int i = 0; i < alphabet.d; ++i) {
            if (!s.has_negative_cycle(alphabet.weight_slot(i))) return false;
        }
        return true;
    }
    return false;
}

} // namespace

bool
violating_subset_exists(const Graph& g)
{
    if (g.edge_count() > kSubsetOracleMaxEdges)
        throw GuardExceeded("edge-subset oracle limited to " + std::to_string(kSubsetOracleMaxEdges) + " edges, got " +
                            std::to_string(g.edge_count()));
    const std::uint32_t subsets = std::uint32_t{1} << g.edge_count();
    for (std::uint32_t s = 1; s < subsets; ++s) {
        const SubsetView view(g, s);
        if (view.strongly_connected() && subset_violates(g, view)) return true;
    }
    return false;
}

bool
eve_wins_bruteforce(const Game& game, VertexId v0)
{
    const auto& g = game.graph();
    if (v0 >= g.vertex_count()) throw UsageError("initial vertex out of range");

    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> order{v0};
    seen[v0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto e : g.out_edges(order[head])) {
            if (!seen[g.target(e)]) {
                seen[g.target(e)] = true;
                order.push_back(g.target(e));
            }
        }
    }

    std::vector<VertexId> choosers;
    std::uint64_t total = 1;
    for (auto v : order) {
        if (game.owner(v) != Player::Eve) continue;
        if (g.is_sink(v)) continue;
        choosers.push_back(v);
        total *= g.out_degree(v);
        if (total > kStrategyOracleMaxStrategies)
            throw GuardExceeded("strategy oracle limited to " + std::to_string(kStrategyOracleMaxStrategies) +
                                " positional strategies");
    }

    std::vector<std::size_t> digit(choosers.size(), 0);
    PositionalStrategy sigma(g.vertex_count());
    for (std::uint64_t round = 0; round < total; ++round) {
        for (std::size_t i = 0; i < choosers.size(); ++i)
            sigma.set(choosers[i], *g.out_edges(choosers[i]).begin() + static_cast<EdgeId>(digit[i]));
        const auto r = restrict_to_strategy(game, sigma, v0);
        bool eve_stuck = false;
        for (VertexId v = 0; v < r.graph.vertex_count() && !eve_stuck; ++v)
            eve_stuck = r.owner[v] == Player::Eve && r.graph.is_sink(v);
        if (!eve_stuck && graph_satisfies(r.graph)) return true;

        for (std::size_t i = 0; i < choosers.size(); ++i) {
            if (++digit[i] < g.out_degree(choosers[i])) break;
            digit[i] = 0;
        }
    }
    return false;
}

std::vector<bool>
winning_region_bruteforce(const Game& game)
{
    std::vector<bool> out(game.vertex_count());
    for (VertexId v = 0; v < game.vertex_count(); ++v) out[v] = eve_wins_bruteforce(game, v);
    return out;
}

} // namespace sepgame
