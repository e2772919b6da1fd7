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

#include "sepgame/frontend/bench.hpp"

#include <cstdio>

#include "sepgame/combos/universal_sequence.hpp"
#include "sepgame/errors.hpp"
#include "sepgame/frontend/generator.hpp"
#include "sepgame/frontend/solver.hpp"

namespace sepgame {

namespace {

BenchRow
measure(const GeneratorParams& params)
{
    const auto game = generate_game(params);
    const auto result = solve(game, 0, Algorithm::Separating);
    BenchRow row;
    row.objective = params.objective;
    row.n = params.vertices;
    row.m = game.graph().edge_count();
    row.states = result.stats.automaton_states;
    row.product_states = result.stats.product_vertices;
    row.milliseconds = result.stats.milliseconds;
    row.ratio = static_cast<double>(row.states) / result.stats.automaton_bound;
    return row;
}

} // namespace

std::vector<BenchRow>
run_bench(const std::string& suite)
{
    std::vector<BenchRow> rows;
    if (suite == "small") {
        const Objective objectives[] = {Objective::safety(), Objective::parity(4), Objective::mean_payoff(2),
                                        Objective::parity_or_mp(2, 2), Objective::disj_mp(2, 2)};
        std::uint64_t seed = 1;
        for (const auto& obj : objectives) {
            for (std::uint32_t n : {4u, 8u, 16u}) rows.push_back(measure({n, 1, 3, obj, seed++}));
        }
    } else if (suite == "scaling") {
        for (std::uint32_t n : {50u, 100u, 200u, 400u}) rows.push_back(measure({n, 4, 4, Objective::disj_mp(2, 2), n}));
        rows.push_back(measure({100'000, 0, 10, Objective::safety(), 7}));
    } else {
        throw UsageError("unknown bench suite '" + suite + "' (expected small or scaling)");
    }
    return rows;
}

std::string
bench_table(const std::vector<BenchRow>& rows)
{
    std::string out = "objective\tn\td\tN\tm\tstates\tproduct_states\tms\tratio\n";
    char buf[64];
    for (const auto& r : rows) {
        const auto name = r.objective.to_string();
        out += name.substr(0, name.find(' ')) + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.objective.d) +
               "\t" + std::to_string(r.objective.N) + "\t" + std::to_string(r.m) + "\t" + std::to_string(r.states) +
               "\t" + std::to_string(r.product_states) + "\t";
        std::snprintf(buf, sizeof buf, "%.3f\t%.4f\n", r.milliseconds, r.ratio);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "# c\t%.4f\n", kUniversalSizeConstant);
    out += buf;
    return out;
}

} // namespace sepgame
