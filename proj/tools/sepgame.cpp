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

// sepgame: solve games through separating automata.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "sepgame/automaton/chained_game.hpp"
#include "sepgame/automaton/dot.hpp"
#include "sepgame/errors.hpp"
#include "sepgame/frontend/bench.hpp"
#include "sepgame/frontend/game_format.hpp"
#include "sepgame/frontend/generator.hpp"
#include "sepgame/frontend/solver.hpp"

using namespace sepgame;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kInvariant = 3, kGuard = 4 };

std::string
read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void
write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

struct ObjectiveArgs
{
    std::string kind = "parity";
    int d = 2;
    int N = 1;

    void attach(CLI::App* app)
    {
        app->add_option("--objective", kind, "safety, parity, mp, parity-mp or disj-mp")
            ->check(CLI::IsMember({"safety", "parity", "mp", "parity-mp", "disj-mp"}));
        app->add_option("--d", d, "largest priority, or dimension for disj-mp");
        app->add_option("--N", N, "largest absolute weight");
    }
    Objective get() const { return make_objective(kind, d, N); }
};

std::string
vertex_list(const std::vector<bool>& set)
{
    std::string out;
    for (std::size_t v = 0; v < set.size(); ++v) {
        if (!set[v]) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"Solve parity, mean payoff and combined games via separating automata"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    VertexId from = 0;

    auto* solve_cmd = app.add_subcommand("solve", "decide the winner from a vertex");
    std::string algo = "separating";
    bool region = false;
    bool stats = false;
    bool verify = false;
    std::string dot_path;
    solve_cmd->add_option("--input", input, "game file, - for stdin")->required();
    solve_cmd->add_option("--from", from, "initial vertex")->required();
    solve_cmd->add_option("--algo", algo, "separating or oracle")->check(CLI::IsMember({"separating", "oracle"}));
    solve_cmd->add_flag("--region", region, "also print Eve's winning region");
    solve_cmd->add_flag("--stats", stats, "print automaton and product sizes");
    solve_cmd->add_flag("--verify", verify, "run both algorithms and fail with exit 3 if they disagree");
    solve_cmd->add_option("--dot", dot_path, "write the chained game in DOT format to this file");

    auto* aut_cmd = app.add_subcommand("automaton", "build a separating automaton");
    ObjectiveArgs aut_obj;
    std::uint32_t aut_n = 2;
    std::string emit = "stats";
    aut_obj.attach(aut_cmd);
    aut_cmd->add_option("--n", aut_n, "number of vertices the automaton separates for")->required();
    aut_cmd->add_option("--emit", emit, "dot or stats")->check(CLI::IsMember({"dot", "stats"}));

    auto* gen_cmd = app.add_subcommand("generate", "write a random game");
    ObjectiveArgs gen_obj;
    GeneratorParams gen;
    gen_obj.attach(gen_cmd);
    gen_cmd->add_option("--vertices", gen.vertices)->required();
    gen_cmd->add_option("--min-degree", gen.min_degree);
    gen_cmd->add_option("--max-degree", gen.max_degree);
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--output", output, "destination file, stdout by default");

    auto* check_cmd = app.add_subcommand("check", "validate a game file");
    check_cmd->add_option("--input", input, "game file, - for stdin")->required();

    auto* bench_cmd = app.add_subcommand("bench", "print a timing table");
    std::string suite = "small";
    bench_cmd->add_option("--suite", suite, "small or scaling")->check(CLI::IsMember({"small", "scaling"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    std::string where;
    try {
        if (*solve_cmd) {
            where = input;
            const auto game = parse_game(read_input(input));
            where.clear();
            if (from >= game.vertex_count()) throw UsageError("vertex " + std::to_string(from) + " out of range");
            const auto chosen = algo == "oracle" ? Algorithm::Oracle : Algorithm::Separating;
            const auto result = solve(game, from, chosen);
            std::cout << (result.eve_wins ? "WIN" : "LOSE") << "\n";
            std::vector<bool> win;
            if (region || verify) win = solve_region(game, chosen).eve_wins;
            if (region) std::cout << "region " << vertex_list(win) << "\n";
            if (stats && chosen == Algorithm::Separating) {
                const auto& s = result.stats;
                std::cout << "automaton_states " << s.automaton_states << "\n"
                          << "automaton_bound " << s.automaton_bound << "\n"
                          << "automaton_states_used " << s.automaton_states_used << "\n"
                          << "product_vertices " << s.product_vertices << "\n"
                          << "product_edges " << s.product_edges << "\n";
            }
            if (stats) std::cout << "ms " << result.stats.milliseconds << "\n";
            if (!dot_path.empty()) {
                const auto aut = separating_automaton(game.objective(), static_cast<std::uint32_t>(game.vertex_count()));
                write_output(dot_path, chained_game_to_dot(chained_game(game, aut, from), aut));
            }
            if (verify) {
                const auto other = chosen == Algorithm::Oracle ? Algorithm::Separating : Algorithm::Oracle;
                if (solve_region(game, other).eve_wins != win)
                    throw InvariantViolation("separating and oracle solvers disagree");
            }
        } else if (*aut_cmd) {
            const auto aut = separating_automaton(aut_obj.get(), aut_n);
            if (emit == "dot") {
                std::cout << automaton_to_dot(aut);
            } else {
                std::cout << "objective\t" << aut.alphabet().to_string() << "\n"
                          << "n\t" << aut_n << "\n"
                          << "states\t" << aut.state_count() << "\n"
                          << "letters\t" << aut.alphabet().letter_count() << "\n"
                          << "bound\t" << separator_size_bound(aut_obj.get(), aut_n) << "\n";
            }
        } else if (*gen_cmd) {
            gen.objective = gen_obj.get();
            write_output(output, print_game(generate_game(gen)));
        } else if (*check_cmd) {
            where = input;
            const auto game = parse_game(read_input(input));
            std::cout << "OK " << game.objective().to_string() << ", " << game.vertex_count() << " vertices, "
                      << game.graph().edge_count() << " edges\n";
        } else if (*bench_cmd) {
            std::cout << bench_table(run_bench(suite));
        }
    } catch (const ParseError& e) {
        std::cerr << (where.empty() ? "" : where + ":") << e.what() << "\n";
        return kParse;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return kGuard;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
