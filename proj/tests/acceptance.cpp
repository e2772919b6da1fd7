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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sepgame/automaton/automaton.hpp"
#include "sepgame/combos/combos.hpp"
#include "sepgame/combos/universal_sequence.hpp"
#include "sepgame/core/cycles.hpp"
#include "sepgame/frontend/game_format.hpp"
#include "sepgame/frontend/generator.hpp"
#include "sepgame/frontend/solver.hpp"
#include "sepgame/oracle/oracle.hpp"
#include "sepgame/safety/safety.hpp"
#include "sepgame/separators/separators.hpp"
#include "support.hpp"

using namespace sepgame;

namespace {

using Clock = std::chrono::steady_clock;

double
seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Verdict
{
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void
criterion(const char* id, const char* title, double time_limit, const std::function<Verdict()>& body)
{
    const auto start = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.fail(std::string("exception: ") + e.what());
    }
    const double took = seconds_since(start);
    if (time_limit > 0 && took > time_limit) v.fail("took " + std::to_string(took) + " s, limit " +
                                                    std::to_string(time_limit) + " s; " + v.detail);
    std::printf("%s  %s %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), took);
    std::fflush(stdout);
    failures += !v.pass;
}

struct GridPoint
{
    Objective objective;
    std::uint32_t n;
};

// The parameter grid n <= 8, d <= 4, N <= 3 for each separator family.
std::vector<GridPoint>
grid()
{
    std::vector<GridPoint> out;
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (int N = 0; N <= 3; ++N) out.push_back({Objective::mean_payoff(N), n});
        for (int d = 1; d <= 4; ++d) out.push_back({Objective::parity(d), n});
        for (int d = 1; d <= 4; ++d)
            for (int N = 0; N <= 3; ++N) out.push_back({Objective::parity_or_mp(d, N), n});
        for (int d = 1; d <= 4; ++d)
            for (int N = 0; N <= 3; ++N) out.push_back({Objective::disj_mp(d, N), n});
    }
    return out;
}

// Edge sets of size <= k over `candidates`, as index lists.
void
small_subsets(std::size_t total, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        visit(pick);
        if (pick.size() == k) return;
        for (std::size_t i = from; i < total; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

std::string
sequence_string(const std::vector<std::uint32_t>& u)
{
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
    return s + ")";
}

} // namespace

int
main()
{
    criterion("C1", "separating solver equals strategy enumeration", 300, [] {
        Verdict v;
        struct Family
        {
            const char* name;
            std::function<Objective(Random&)> draw;
            std::uint32_t max_n;
        };
        const Family families[] = {
            {"parity", [](Random& r) { return Objective::parity(static_cast<int>(r.between(0, 4))); }, 6},
            {"mp", [](Random& r) { return Objective::mean_payoff(static_cast<int>(r.between(0, 3))); }, 6},
            {"parity-mp",
             [](Random& r) {
                 const auto d = static_cast<int>(r.between(0, 4));
                 return Objective::parity_or_mp(d, static_cast<int>(r.between(0, 3)));
             },
             5},
            {"disj-mp",
             [](Random& r) {
                 const auto d = static_cast<int>(r.between(1, 3));
                 return Objective::disj_mp(d, static_cast<int>(r.between(0, 2)));
             },
             5},
        };
        std::size_t games = 0, vertices = 0, eve_wins = 0;
        std::string per_family;
        for (const auto& fam : families) {
            Random rng(0xC1 + games);
            for (int k = 0; k < 500; ++k, ++games) {
                const auto obj = fam.draw(rng);
                const auto n = static_cast<std::uint32_t>(rng.between(1, fam.max_n));
                const auto game = generate_game({n, 0, 3, obj, rng.below(1ull << 40)});
                for (VertexId v0 = 0; v0 < n; ++v0, ++vertices) {
                    const bool sep = solve(game, v0, Algorithm::Separating).eve_wins;
                    const bool ora = eve_wins_bruteforce(game, v0);
                    eve_wins += ora;
                    if (sep != ora)
                        v.fail(std::string(fam.name) + " mismatch at vertex " + std::to_string(v0) + " of:\n" +
                               print_game(game));
                }
            }
        }
        if (v.pass)
            v.detail = std::to_string(games) + " games (500 per objective), " + std::to_string(vertices) +
                       " vertices, 0 mismatches, Eve wins " + std::to_string(eve_wins);
        return v;
    });

    criterion("C2", "soundness of every separator on the grid n<=8, d<=4, N<=3", 120, [] {
        Verdict v;
        std::size_t points = 0, states = 0;
        for (const auto& [obj, n] : grid()) {
            const auto aut = separating_automaton(obj, n);
            const auto reach = reachable_automaton(aut);
            states += reach.graph.vertex_count();
            ++points;
            bool ok = false;
            switch (obj.kind) {
            case ObjectiveKind::MeanPayoff: ok = !find_negative_cycle(reach.graph); break;
            case ObjectiveKind::Parity: ok = graph_satisfies_parity(reach.graph); break;
            case ObjectiveKind::ParityOrMP: ok = graph_satisfies_parity_or_mp(reach.graph); break;
            case ObjectiveKind::DisjMP: ok = graph_satisfies_disjmp(reach.graph); break;
            default: break;
            }
            if (!ok) v.fail(obj.to_string() + " n=" + std::to_string(n) + " accepts a losing cycle");
        }
        if (v.pass)
            v.detail = std::to_string(points) + " automata, " + std::to_string(states) +
                       " reachable states, every reachable graph satisfies its objective";
        return v;
    });

    criterion("C3", "separation: >=1000 good graphs per grid point all accepted", 600, [] {
        Verdict v;
        Random rng(0xC3);
        std::size_t points = 0, graphs = 0, edges = 0;
        for (const auto& [obj, n] : grid()) {
            const auto aut = separating_automaton(obj, n);
            ++points;
            for (int k = 0; k < 1000; ++k, ++graphs) {
                const auto g = sgtest::random_graph_where(rng, obj, n, 3 * n,
                                                          [](const Graph& h) { return graph_satisfies(h); });
                edges += g.edge_count();
                if (!accepts_all_paths(aut, g)) {
                    v.fail(obj.to_string() + " n=" + std::to_string(n) + " rejects a path of a good graph");
                    break;
                }
            }
        }
        if (v.pass) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%zu points, %zu graphs (mean %.1f edges), 0 rejections", points, graphs,
                          static_cast<double>(edges) / static_cast<double>(graphs));
            v.detail = buf;
        }
        return v;
    });

    criterion("C4", "size formulas", 0, [] {
        Verdict v;
        for (std::uint32_t n = 1; n <= 64; ++n)
            for (int N = 0; N <= 8; ++N)
                if (mp_separator(n, N).state_count() != static_cast<std::uint64_t>(n - 1) * N + 1)
                    v.fail("mp n=" + std::to_string(n) + " N=" + std::to_string(N));

        std::uint64_t pm_reachable = 0, pm_bound = 0;
        for (std::uint32_t n = 1; n <= 8; ++n) {
            for (int d = 1; d <= 4; ++d) {
                for (int N = 0; N <= 3; ++N) {
                    const auto ap = parity_separator(n, d);
                    const auto amp = mp_separator(n, N);
                    const auto reach = reachable_automaton(parity_mp_separator(ap, amp, d));
                    const auto bound = static_cast<std::uint64_t>(d + 1) * ap.state_count() * amp.state_count();
                    pm_reachable += reach.graph.vertex_count();
                    pm_bound += bound;
                    if (reach.graph.vertex_count() > bound) v.fail("parity-mp above (d+1)|A_P||A_MP|");
                }
            }
        }

        double worst = 0;
        for (std::uint32_t n = 1; n <= 256; ++n) {
            for (int d = 1; d <= 4; ++d) {
                for (int N = 1; N <= 3; ++N) {
                    std::uint64_t formula = 0;
                    for (auto x : universal_sequence(n).values) formula += static_cast<std::uint64_t>(d) * ((x - 1) * N + 1);
                    const auto states = disjmp_separator(n, d, N).state_count();
                    if (states != formula) v.fail("disj-mp n=" + std::to_string(n) + " state count off the formula");
                    const double ratio = disjmp_size_ratio(states, n, d, N);
                    worst = std::max(worst, ratio);
                    if (ratio > kUniversalSizeConstant) v.fail("disj-mp above c n log2(n+1) d N");
                }
            }
        }

        std::size_t parity_checked = 0;
        for (std::uint32_t n = 1; n <= 32; ++n) {
            for (int d = 2; d <= 8; d += 2, ++parity_checked) {
                if (parity_separator(n, d).state_count() > parity_size_bound(n, d))
                    v.fail("parity n=" + std::to_string(n) + " d=" + std::to_string(d) + " above the binomial bound");
            }
        }
        if (v.pass) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "mp exact for n<=64,N<=8; parity-mp reachable %llu <= bound %llu over 128 points; "
                          "disj-mp exact for n<=256 with max ratio %.4f <= c=%.1f; parity bound holds on %zu points",
                          static_cast<unsigned long long>(pm_reachable), static_cast<unsigned long long>(pm_bound),
                          worst, kUniversalSizeConstant, parity_checked);
            v.detail = buf;
        }
        return v;
    });

    criterion("C5", "universal sequences", 0, [] {
        Verdict v;
        const char* expected[] = {"(1,2)", "(1,3,1)", "(1,2,4,1)", "(1,2,5,1,2)", "(1,3,1,6,1,2)"};
        std::string listing;
        for (std::uint32_t n = 2; n <= 6; ++n) {
            const auto s = sequence_string(universal_sequence(n).values);
            listing += (n > 2 ? " " : "") + s;
            if (s != expected[n - 2]) v.fail("u_" + std::to_string(n) + " = " + s);
        }
        using Seq = std::vector<std::uint32_t>;
        if (!embeds(Seq{5, 2, 3, 3}, Seq{4, 6, 1, 2, 4, 1, 3})) v.fail("(5,2,3,3) should embed into (4,6,1,2,4,1,3)");
        if (embeds(Seq{5, 2, 3, 3}, Seq{3, 2, 5, 3, 3})) v.fail("(5,2,3,3) should not embed into (3,2,5,3,3)");
        std::size_t checked = 0;
        for (std::uint32_t n = 1; n <= 12; ++n) {
            const auto u = universal_sequence(n).values;
            Seq prefix;
            std::function<void(std::uint32_t)> rec = [&](std::uint32_t left) {
                ++checked;
                if (!embeds(prefix, u)) v.fail(sequence_string(prefix) + " does not embed into u_" + std::to_string(n));
                for (std::uint32_t x = 1; x <= left; ++x) {
                    prefix.push_back(x);
                    rec(left - x);
                    prefix.pop_back();
                }
            };
            rec(n);
        }
        if (v.pass)
            v.detail = listing + "; embedding examples true/false; " + std::to_string(checked) +
                       " sequences embed exhaustively for n<=12";
        return v;
    });

    criterion("C6", "polynomial checkers equal the edge-subset oracle", 0, [] {
        Verdict v;
        std::size_t random_graphs = 0, exhaustive = 0, violated = 0;
        auto compare = [&](const Graph& g) {
            const bool sat = graph_satisfies(g);
            violated += !sat;
            if (sat == violating_subset_exists(g)) v.fail("disagreement on a " + g.alphabet().to_string() + " graph");
        };
        Random rng(0xC6);
        for (int k = 0; k < 10000; ++k, ++random_graphs) {
            const auto d = static_cast<int>(rng.between(1, 4));
            const auto obj = Objective::parity_or_mp(d, static_cast<int>(rng.between(1, 3)));
            compare(sgtest::random_graph(rng, obj, 1 + rng.below(4), 10));
        }
        for (int k = 0; k < 10000; ++k, ++random_graphs) {
            const auto d = static_cast<int>(rng.between(1, 3));
            const auto obj = Objective::disj_mp(d, static_cast<int>(rng.between(1, 2)));
            compare(sgtest::random_graph(rng, obj, 1 + rng.below(4), 10));
        }

        struct Universe
        {
            Objective objective;
            std::uint32_t vertices;
            std::vector<Color> colours;
        };
        std::vector<Universe> universes = {
            {Objective::parity_or_mp(2, 1), 2, Objective::parity_or_mp(2, 1).letters()},
            {Objective::disj_mp(2, 1), 2, Objective::disj_mp(2, 1).letters()},
            {Objective::parity_or_mp(1, 1), 3, Objective::parity_or_mp(1, 1).letters()},
            {Objective::disj_mp(2, 1), 3, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}},
        };
        for (const auto& u : universes) {
            std::vector<sgtest::EdgeSpec> candidates;
            for (VertexId s = 0; s < u.vertices; ++s)
                for (VertexId t = 0; t < u.vertices; ++t)
                    for (const auto& c : u.colours) candidates.push_back({s, t, c});
            small_subsets(candidates.size(), 4, [&](const std::vector<std::size_t>& pick) {
                std::vector<sgtest::EdgeSpec> edges;
                for (auto i : pick) edges.push_back(candidates[i]);
                compare(sgtest::make_graph(u.objective, u.vertices, edges));
                ++exhaustive;
            });
        }
        if (v.pass)
            v.detail = std::to_string(random_graphs) + " random graphs (|E|<=10) + " + std::to_string(exhaustive) +
                       " exhaustive graphs (|E|<=4), " + std::to_string(violated) + " violating, 0 disagreements";
        return v;
    });

    criterion("C7", "scaling smoke test", 0, [] {
        Verdict v;
        std::vector<double> xs, ys;
        std::string times;
        for (std::uint32_t n : {50u, 100u, 200u, 400u}) {
            const auto game = generate_game({n, 4, 4, Objective::disj_mp(2, 2), n});
            if (game.graph().edge_count() != 4 * n) v.fail("generator did not produce m = 4n");
            const auto start = Clock::now();
            solve(game, 0, Algorithm::Separating);
            const double t = seconds_since(start);
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(t));
            char buf[48];
            std::snprintf(buf, sizeof buf, "%sn=%u:%.3fs", times.empty() ? "" : " ", n, t);
            times += buf;
        }
        const double mx = (xs[0] + xs[1] + xs[2] + xs[3]) / 4, my = (ys[0] + ys[1] + ys[2] + ys[3]) / 4;
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        const double slope = sxy / sxx;
        if (slope > 3.0) v.fail("disj-mp log-log slope " + std::to_string(slope) + " exceeds 3");

        const auto safety = sgtest::random_sparse_game(Objective::safety(), 100'000, 500'000, 1);
        if (safety.graph().edge_count() != 500'000) v.fail("safety instance does not have 5*10^5 edges");
        const auto start = Clock::now();
        const auto region = solve_safety(safety);
        const double t = seconds_since(start);
        if (t >= 1.0) v.fail("safety solve took " + std::to_string(t) + " s");
        std::size_t winning = 0;
        for (bool b : region.eve_wins) winning += b;

        char buf[256];
        std::snprintf(buf, sizeof buf, "; slope %.2f <= 3; safety n=10^5 m=5*10^5 in %.3f s (< 1 s), Eve wins %zu of 10^5",
                      slope, t, winning);
        if (v.pass) v.detail = "disj-mp d=2 N=2 m=4n " + times + buf;
        return v;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures;
}
