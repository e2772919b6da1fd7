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

#include <doctest.h>

#include "sepgame/core/cycles.hpp"
#include "sepgame/errors.hpp"
#include "sepgame/separators/separators.hpp"
#include "support.hpp"

using namespace sepgame;

namespace {

using Tuple = std::vector<std::uint32_t>;

std::vector<Tuple>
reference_leaves(std::uint32_t n, std::uint32_t h)
{
    std::vector<Tuple> out;
    Tuple prefix;
    if (n > 0) sgtest::leaf_tuples(sgtest::universal_tree_reference(n, h), prefix, out);
    return out;
}

sgtest::Tree
to_tree(const UniversalTree::Node& node)
{
    sgtest::Tree t;
    for (const auto& c : node.children) t.children.push_back(to_tree(c));
    return t;
}

bool
same_shape(const sgtest::Tree& a, const sgtest::Tree& b)
{
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same_shape(a.children[i], b.children[i])) return false;
    }
    return true;
}

// The truncation rule, evaluated by scanning the leaf list.
std::optional<std::size_t>
reference_delta(const std::vector<Tuple>& leaves, std::size_t x, int p, std::uint32_t h)
{
    const auto j = static_cast<std::uint32_t>((p + 1) / 2);
    const std::size_t keep = p % 2 == 1 ? h - j + 1 : h - j;
    auto trunc = [&](const Tuple& t) { return Tuple(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(keep)); };
    const auto mine = trunc(leaves[x]);
    for (std::size_t y = 0; y < leaves.size(); ++y) {
        const auto theirs = trunc(leaves[y]);
        if (p % 2 == 1 ? theirs > mine : theirs >= mine) return y;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("universal tree leaf counts")
{
    for (std::uint32_t n = 0; n <= 20; ++n) CHECK(universal_tree(n, 1).leaf_count() == n);
    for (std::uint32_t h = 0; h <= 6; ++h) CHECK(universal_tree(1, h).leaf_count() == 1);
    CHECK(universal_tree(3, 2).leaf_count() == 5);
    CHECK(universal_tree(0, 3).leaf_count() == 0);
    CHECK(universal_tree(5, 0).leaf_count() == 1);
}

TEST_CASE("universal tree agrees with the recursive definition")
{
    for (std::uint32_t n = 1; n <= 10; ++n) {
        for (std::uint32_t h = 1; h <= 4; ++h) {
            const UniversalTree tree(n, h);
            const auto ref = reference_leaves(n, h);
            REQUIRE(tree.leaf_count() == ref.size());
            CHECK(same_shape(to_tree(tree.materialize()), sgtest::universal_tree_reference(n, h)));
            for (std::uint64_t i = 0; i < ref.size(); ++i) {
                CHECK(tree.leaf(i) == ref[i]);
                CHECK(*tree.index_of(ref[i]) == i);
                for (std::uint32_t depth = 0; depth <= h; ++depth) {
                    const auto [first, last] = tree.block(i, depth);
                    for (std::uint64_t k = 0; k < ref.size(); ++k) {
                        const bool agrees = std::equal(ref[k].begin(), ref[k].begin() + depth, ref[i].begin());
                        CHECK(agrees == (k >= first && k < last));
                    }
                }
            }
            Tuple bogus(h, 1000);
            CHECK_FALSE(tree.index_of(bogus));
        }
    }
}

TEST_CASE("every small tree embeds into the universal tree")
{
    for (std::uint32_t h = 1; h <= 3; ++h) {
        for (std::uint32_t n = 1; n <= 5; ++n) {
            const auto big = to_tree(universal_tree(n, h).materialize());
            for (const auto& t : sgtest::all_trees(n, h)) {
                REQUIRE(sgtest::leaves(t) <= n);
                CHECK(sgtest::embeds_tree(t, big));
            }
        }
    }
    // A tree with more leaves than n cannot embed, which keeps the check honest.
    CHECK_FALSE(sgtest::embeds_tree(sgtest::Tree{std::vector<sgtest::Tree>(3)},
                                    to_tree(universal_tree(2, 1).materialize())));
}

TEST_CASE("parity separator examples")
{
    const auto a = parity_separator(2, 2);
    REQUIRE(a.state_count() == 2);
    CHECK(a.initial() == 0);
    const Color p0{0}, p1{1}, p2{2};
    CHECK(*a.delta(0, p0) == 0);
    CHECK(*a.delta(1, p0) == 1);
    CHECK(*a.delta(0, p2) == 0);
    CHECK(*a.delta(1, p2) == 0);
    CHECK(*a.delta(0, p1) == 1);
    CHECK_FALSE(a.delta(1, p1));
    CHECK(a.state_label(1) == "(1)");
    CHECK_FALSE(run(a, std::vector<Color>{p1, p1}));
    std::vector<Color> word;
    for (int k = 0; k < 50; ++k) {
        word.push_back(p1);
        word.push_back(p2);
    }
    CHECK(run(a, word).has_value());
}

TEST_CASE("parity separator follows the truncation rule")
{
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for (int d = 1; d <= 6; ++d) {
            const auto h = static_cast<std::uint32_t>((d + 1) / 2);
            const auto a = parity_separator(n, d);
            const auto ref = reference_leaves(n, h);
            REQUIRE(a.state_count() == ref.size());
            for (std::size_t x = 0; x < ref.size(); ++x) {
                for (int p = 0; p <= d; ++p) {
                    const auto got = a.delta(x, Color{p});
                    const auto want = reference_delta(ref, x, p, h);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got) CHECK(*got == *want);
                }
            }
        }
    }
}

TEST_CASE("parity separator size bound")
{
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(5) == 3);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK_THROWS_AS(binomial(200, 100), GuardExceeded);
    for (std::uint32_t n = 1; n <= 32; ++n) {
        for (int d = 2; d <= 8; d += 2) {
            const auto states = parity_separator(n, d).state_count();
            CHECK(states == universal_tree(n, static_cast<std::uint32_t>(d / 2)).leaf_count());
            CHECK(states <= parity_size_bound(n, d));
        }
    }
}

TEST_CASE("mean payoff separator examples")
{
    const auto one = mp_separator(1, 3);
    CHECK(one.state_count() == 1);
    CHECK(run(one, std::vector<Color>{{0}, {3}, {1}}).has_value());
    CHECK_FALSE(run(one, std::vector<Color>{{0}, {-1}}));

    const auto a = mp_separator(3, 2);
    CHECK(a.state_count() == 5);
    CHECK(a.initial() == 4);
    CHECK(*run(a, std::vector<Color>{{-2}, {-2}}) == 0);
    CHECK_FALSE(run(a, std::vector<Color>{{-2}, {-2}, {-1}}));
    CHECK(*a.delta(3, Color{2}) == 4);
    for (std::uint32_t n = 1; n <= 64; ++n)
        for (int N = 0; N <= 8; ++N) CHECK(mp_separator(n, N).state_count() == mp_separator_size(n, N));
}

TEST_CASE("mean payoff separator is monotone")
{
    for (std::uint32_t n = 1; n <= 6; ++n) {
        for (int N = 0; N <= 3; ++N) {
            const auto a = mp_separator(n, N);
            for (StateId q = 0; q < a.state_count(); ++q) {
                for (StateId r = q; r < a.state_count(); ++r) {
                    for (int w = -N; w <= N; ++w) {
                        const auto lo = a.delta(q, Color{w});
                        const auto hi = a.delta(r, Color{w});
                        if (!lo) continue;
                        REQUIRE(hi);
                        CHECK(*lo <= *hi);
                    }
                }
            }
        }
    }
}

TEST_CASE("separators are sound")
{
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (int d = 1; d <= 6; ++d) CHECK(graph_satisfies_parity(reachable_automaton(parity_separator(n, d)).graph));
        for (int N = 0; N <= 4; ++N) CHECK(graph_satisfies_mp(reachable_automaton(mp_separator(n, N)).graph));
    }
}

TEST_CASE("separators accept every good graph of their size")
{
    Random rng(2024);
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (int d = 1; d <= 6; ++d) {
            const auto obj = Objective::parity(d);
            const auto a = parity_separator(n, d);
            for (int k = 0; k < 1000; ++k) {
                const auto g = sgtest::random_graph_where(rng, obj, n, 3 * n, graph_satisfies_parity);
                REQUIRE(accepts_all_paths(a, g));
            }
        }
        for (int N = 0; N <= 4; ++N) {
            const auto obj = Objective::mean_payoff(N);
            const auto a = mp_separator(n, N);
            for (int k = 0; k < 1000; ++k) {
                const auto g = sgtest::random_graph_where(rng, obj, n, 3 * n,
                                                          [](const Graph& h) { return graph_satisfies_mp(h); });
                REQUIRE(accepts_all_paths(a, g));
            }
        }
    }
}

TEST_CASE("separators are tight on long descending paths")
{
    // n vertices in a line of -N edges ending in a 0 loop: good, and exactly
    // what the counter must survive.
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (int N = 1; N <= 4; ++N) {
            std::vector<sgtest::EdgeSpec> edges;
            for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, {-N}});
            edges.push_back({n - 1, n - 1, {0}});
            const auto g = sgtest::make_graph(Objective::mean_payoff(N), n, edges);
            CHECK(accepts_all_paths(mp_separator(n, N), g));
            if (n > 1) CHECK_FALSE(accepts_all_paths(mp_separator(n - 1, N), g));
        }
    }
    // Same shape with priority 1 edges: n - 1 odd steps need n leaves.
    for (std::uint32_t n = 2; n <= 8; ++n) {
        std::vector<sgtest::EdgeSpec> edges;
        for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, {1}});
        edges.push_back({n - 1, n - 1, {0}});
        const auto g = sgtest::make_graph(Objective::parity(2), n, edges);
        CHECK(accepts_all_paths(parity_separator(n, 2), g));
        CHECK_FALSE(accepts_all_paths(parity_separator(n - 1, 2), g));
    }
}
