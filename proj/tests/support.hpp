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

// Shared fixtures and reference implementations for the test suites. The
// reference procedures here are deliberately naive and share no code with
// the library algorithms they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <tuple>
#include <vector>

#include "sepgame/core/game.hpp"
#include "sepgame/core/graph.hpp"
#include "sepgame/frontend/generator.hpp"

namespace sgtest {

using namespace sepgame;

struct EdgeSpec
{
    VertexId src;
    VertexId dst;
    Color color;
};

inline Graph
make_graph(const Objective& obj, std::size_t n, const std::vector<EdgeSpec>& edges)
{
    GraphBuilder b(n, obj);
    for (const auto& e : edges) b.add_edge(e.src, e.dst, e.color);
    return std::move(b).build();
}

inline Game
make_game(const Objective& obj, const std::vector<Player>& owner, const std::vector<EdgeSpec>& edges)
{
    return Game(make_graph(obj, owner.size(), edges), owner);
}

inline std::vector<EdgeSpec>
edge_specs(const Graph& g)
{
    std::vector<EdgeSpec> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto c = g.color(e);
        out.push_back({g.source(e), g.target(e), Color(c.begin(), c.end())});
    }
    return out;
}

/** Up to max_edges distinct random edges on n vertices. */
inline std::vector<EdgeSpec>
random_edges(Random& rng, const Objective& obj, std::size_t n, std::size_t max_edges)
{
    const auto count = rng.below(max_edges + 1);
    std::vector<EdgeSpec> out;
    for (std::size_t tries = 0; out.size() < count && tries < 20 * (count + 1); ++tries) {
        EdgeSpec e{static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)), random_color(rng, obj)};
        const bool dup = std::any_of(out.begin(), out.end(), [&](const EdgeSpec& o) {
            return o.src == e.src && o.dst == e.dst && o.color == e.color;
        });
        if (!dup) out.push_back(std::move(e));
    }
    return out;
}

inline Graph
random_graph(Random& rng, const Objective& obj, std::size_t n, std::size_t max_edges)
{
    return make_graph(obj, n, random_edges(rng, obj, n, max_edges));
}

/**
 * Exactly m distinct edges with uniform sources and targets, so out-degrees
 * vary and sinks of both players occur.
 */
inline Game
random_sparse_game(const Objective& obj, std::size_t n, std::size_t m, std::uint64_t seed)
{
    Random rng(seed);
    std::vector<Player> owner(n);
    for (auto& o : owner) o = rng.coin() ? Player::Eve : Player::Adam;
    GraphBuilder b(n, obj);
    b.reserve(m);
    while (b.edge_count() < m) {
        const auto s = static_cast<VertexId>(rng.below(n));
        const auto t = static_cast<VertexId>(rng.below(n));
        const auto c = random_color(rng, obj);
        if (!b.contains(s, t, c)) b.add_edge(s, t, c);
    }
    return Game(std::move(b).build(), std::move(owner));
}

/** Odd priority or negative weight: the only colours that can make a cycle bad. */
inline bool
suspicious(const Objective& obj, const Color& c)
{
    const auto ps = obj.priority_slot();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (ps && *ps == i ? c[i] % 2 != 0 : c[i] < 0) return true;
    }
    return false;
}

/**
 * Random graph on n vertices passing `accept`. Starting from a random graph,
 * repairs one edge at a time until it passes: either deletes a random edge,
 * or (every other graph) redraws one suspicious edge with an even priority
 * and non-negative weights, which keeps the graph dense. Both repairs end,
 * since graphs without suspicious edges satisfy every objective.
 */
inline Graph
random_graph_where(Random& rng, const Objective& obj, std::size_t n, std::size_t max_edges,
                   const std::function<bool(const Graph&)>& accept)
{
    auto edges = random_edges(rng, obj, n, max_edges);
    const bool redraw = rng.coin();
    for (;;) {
        auto g = make_graph(obj, n, edges);
        if (accept(g)) return g;
        if (!redraw) {
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
            continue;
        }
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (suspicious(obj, edges[i].color)) bad.push_back(i);
        }
        auto& e = edges[bad.at(rng.below(bad.size()))];
        const auto ps = obj.priority_slot();
        for (std::size_t i = 0; i < e.color.size(); ++i) {
            if (ps && *ps == i) e.color[i] = static_cast<std::int32_t>(2 * rng.below(obj.d / 2 + 1));
            else if (e.color[i] < 0) e.color[i] = static_cast<std::int32_t>(rng.below(obj.N + 1));
        }
        // Redrawing may duplicate another edge; drop the copy.
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (edges[i].src == edges[j].src && edges[i].dst == edges[j].dst && edges[i].color == edges[j].color) {
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
                    --j;
                }
            }
        }
    }
}

/** Every simple cycle, as an edge list, each reported once (from its smallest vertex). */
inline std::vector<std::vector<EdgeId>>
simple_cycles(const Graph& g)
{
    std::vector<std::vector<EdgeId>> out;
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<bool> on_path(n, false);
    std::vector<EdgeId> path;
    std::function<void(VertexId, VertexId)> walk = [&](VertexId start, VertexId at) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.source(e) != at) continue;
            const VertexId t = g.target(e);
            if (t == start) {
                path.push_back(e);
                out.push_back(path);
                path.pop_back();
            } else if (t > start && !on_path[t]) {
                on_path[t] = true;
                path.push_back(e);
                walk(start, t);
                path.pop_back();
                on_path[t] = false;
            }
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        on_path[s] = true;
        walk(s, s);
        on_path[s] = false;
    }
    return out;
}

/** Parity via simple cycles: a closed walk's largest priority is that of one of its simple cycles. */
inline bool
parity_by_cycles(const Graph& g)
{
    const auto slot = *g.alphabet().priority_slot();
    for (const auto& cycle : simple_cycles(g)) {
        int top = 0;
        for (auto e : cycle) top = std::max<int>(top, g.component(e, slot));
        if (top % 2 == 1) return false;
    }
    return true;
}

inline bool
no_negative_cycle_by_cycles(const Graph& g, std::size_t slot)
{
    for (const auto& cycle : simple_cycles(g)) {
        std::int64_t sum = 0;
        for (auto e : cycle) sum += g.component(e, slot);
        if (sum < 0) return false;
    }
    return true;
}

/** Safety game by the textbook greatest fixpoint, O(n * m) rounds. */
inline std::vector<bool>
naive_safety(const Game& game)
{
    const auto& g = game.graph();
    std::vector<bool> w(g.vertex_count(), true);
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!w[v]) continue;
            bool some_in = false;
            bool all_in = true;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (g.source(e) != v) continue;
                if (w[g.target(e)]) some_in = true;
                else all_in = false;
            }
            const bool keep = game.owner(v) == Player::Eve ? some_in : all_in;
            if (!keep) {
                w[v] = false;
                changed = true;
            }
        }
    }
    return w;
}

/**
 * Mean payoff (liminf average >= 0) by value iteration on the minimal
 * energy credit: Eve wins exactly where a finite credit suffices, and finite
 * credits never exceed (n - 1) N.
 */
inline std::vector<bool>
energy_region(const Game& game)
{
    const auto& g = game.graph();
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const std::int64_t cap = (n - 1) * game.objective().N;
    constexpr std::int64_t kTop = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> credit(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (game.owner(v) == Player::Eve && g.out_degree(v) == 0) credit[v] = kTop;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.out_degree(v) == 0) continue;
            const bool eve = game.owner(v) == Player::Eve;
            std::int64_t best = eve ? kTop : 0;
            for (auto e : g.out_edges(v)) {
                const auto next = credit[g.target(e)];
                const std::int64_t need =
                    next == kTop ? kTop : std::max<std::int64_t>(0, next - g.component(e, 0));
                best = eve ? std::min(best, need) : std::max(best, need);
            }
            if (best != kTop && best > cap) best = kTop;
            if (best > credit[v]) {
                credit[v] = best;
                changed = true;
            }
        }
    }
    std::vector<bool> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = credit[v] != kTop;
    return out;
}

/** Ordered tree with all leaves at one depth. */
struct Tree
{
    std::vector<Tree> children;
};

inline std::size_t
leaves(const Tree& t)
{
    if (t.children.empty()) return 1;
    std::size_t total = 0;
    for (const auto& c : t.children) total += leaves(c);
    return total;
}

/**
 * U(n, h) straight from its recursive definition: the children of
 * U(floor(n/2), h), then U(n, h - 1), then the children of
 * U(n - 1 - floor(n/2), h). Empty optional for U(0, h).
 */
inline std::vector<Tree>
universal_children(std::uint32_t n, std::uint32_t h)
{
    if (n == 0 || h == 0) return {};
    auto out = universal_children(n / 2, h);
    Tree middle{universal_children(n, h - 1)};
    out.push_back(std::move(middle));
    for (auto& c : universal_children(n - 1 - n / 2, h)) out.push_back(std::move(c));
    return out;
}

inline Tree
universal_tree_reference(std::uint32_t n, std::uint32_t h)
{
    return Tree{universal_children(n, h)};
}

/** Leaf tuples (x_h, ..., x_1) of a tree, left to right. */
inline void
leaf_tuples(const Tree& t, std::vector<std::uint32_t>& prefix, std::vector<std::vector<std::uint32_t>>& out)
{
    if (t.children.empty()) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t i = 0; i < t.children.size(); ++i) {
        prefix.push_back(i);
        leaf_tuples(t.children[i], prefix, out);
        prefix.pop_back();
    }
}

/** Order- and depth-preserving embedding by exhaustive backtracking. */
inline bool
embeds_tree(const Tree& small, const Tree& big)
{
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t from) {
        if (i == small.children.size()) return true;
        for (std::size_t j = from; j < big.children.size(); ++j) {
            if (embeds_tree(small.children[i], big.children[j]) && place(i + 1, j + 1)) return true;
        }
        return false;
    };
    if (small.children.empty()) return big.children.empty();
    return place(0, 0);
}

/** Every ordered tree of height h with between 1 and max_leaves leaves, all at depth h. */
inline std::vector<Tree>
all_trees(std::uint32_t max_leaves, std::uint32_t h)
{
    if (max_leaves == 0) return {};
    if (h == 0) return {Tree{}};
    std::vector<Tree> out;
    // Sequences of children whose leaf counts sum to at most max_leaves.
    std::vector<std::vector<Tree>> by_budget(max_leaves + 1);
    for (std::uint32_t b = 1; b <= max_leaves; ++b) by_budget[b] = all_trees(b, h - 1);
    std::function<void(std::vector<Tree>&, std::uint32_t)> extend = [&](std::vector<Tree>& kids, std::uint32_t left) {
        if (!kids.empty()) out.push_back(Tree{kids});
        for (const auto& c : by_budget[left]) {
            const auto used = static_cast<std::uint32_t>(leaves(c));
            kids.push_back(c);
            extend(kids, left - used);
            kids.pop_back();
        }
    };
    std::vector<Tree> kids;
    extend(kids, max_leaves);
    return out;
}

} // namespace sgtest
