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

#include "sepgame/frontend/game_format.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <vector>

#include "sepgame/errors.hpp"

namespace sepgame {

namespace {

struct Token
{
    std::string_view text;
    std::size_t column;
};

struct Line
{
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line>
tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
        while (i < raw.size()) {
            while (i < raw.size() && blank(raw[i])) ++i;
            const std::size_t start = i;
            while (i < raw.size() && !blank(raw[i])) ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

template <typename Int>
Int
integer(const Line& line, const Token& tok, const char* what)
{
    Int value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line.number, tok.column, std::string(what) + " '" + std::string(tok.text) + "' out of range");
    if (ec != std::errc() || ptr != last)
        throw ParseError(line.number, tok.column,
                         "expected " + std::string(what) + ", got '" + std::string(tok.text) + "'");
    return value;
}

const Token&
token_at(const Line& line, std::size_t i, const char* expected)
{
    if (i >= line.tokens.size()) {
        const auto& back = line.tokens.back();
        throw ParseError(line.number, back.column + back.text.size(), std::string("missing ") + expected);
    }
    return line.tokens[i];
}

void
expect_keyword(const Line& line, std::string_view keyword)
{
    const auto& tok = line.tokens[0];
    if (tok.text != keyword)
        throw ParseError(line.number, tok.column,
                         "expected '" + std::string(keyword) + "', got '" + std::string(tok.text) + "'");
}

void
expect_count(const Line& line, std::size_t count)
{
    if (line.tokens.size() > count) {
        const auto& extra = line.tokens[count];
        throw ParseError(line.number, extra.column, "unexpected token '" + std::string(extra.text) + "'");
    }
    token_at(line, count - 1, "argument");
}

Objective
objective_line(const Line& line)
{
    expect_keyword(line, "objective");
    const auto& kind = token_at(line, 1, "objective kind");
    std::size_t params = 0;
    if (kind.text == "safety") params = 0;
    else if (kind.text == "parity" || kind.text == "mp") params = 1;
    else if (kind.text == "parity-mp" || kind.text == "disj-mp") params = 2;
    else throw ParseError(line.number, kind.column, "unknown objective '" + std::string(kind.text) + "'");
    expect_count(line, 2 + params);

    int d = 0;
    int N = 0;
    if (kind.text == "mp") {
        N = integer<int>(line, line.tokens[2], "bound N");
    } else if (params >= 1) {
        d = integer<int>(line, line.tokens[2], "bound d");
        if (params == 2) N = integer<int>(line, line.tokens[3], "bound N");
    }
    try {
        return make_objective(kind.text, d, N);
    } catch (const UsageError& e) {
        throw ParseError(line.number, kind.column, e.what());
    }
}

std::optional<std::string>
check_component(const Objective& obj, std::size_t slot, std::int32_t value)
{
    Color single(obj.arity(), 0);
    single[slot] = value;
    return obj.check(single);
}

} // namespace

Objective
make_objective(std::string_view kind, int d, int N)
{
    if (kind == "safety") return Objective::safety();
    if (kind == "parity") return Objective::parity(d);
    if (kind == "mp") return Objective::mean_payoff(N);
    if (kind == "parity-mp") return Objective::parity_or_mp(d, N);
    if (kind == "disj-mp") return Objective::disj_mp(d, N);
    throw UsageError("unknown objective '" + std::string(kind) + "'");
}

Game
parse_game(std::string_view text)
{
    const auto lines = tokenize(text);
    std::size_t at = 0;
    auto next = [&](const char* what) -> const Line& {
        if (at == lines.size()) {
            const std::size_t last = lines.empty() ? 1 : lines.back().number + 1;
            throw ParseError(last, 1, std::string("unexpected end of input, expected ") + what);
        }
        return lines[at++];
    };

    const auto& header = next("'sepgame 1'");
    expect_keyword(header, "sepgame");
    expect_count(header, 2);
    if (header.tokens[1].text != "1")
        throw ParseError(header.number, header.tokens[1].column,
                         "unsupported format version '" + std::string(header.tokens[1].text) + "'");

    const Objective objective = objective_line(next("objective line"));

    const auto& count_line = next("vertices line");
    expect_keyword(count_line, "vertices");
    expect_count(count_line, 2);
    const auto n = integer<std::uint32_t>(count_line, count_line.tokens[1], "vertex count");
    if (n > std::numeric_limits<std::uint32_t>::max() / 2)
        throw ParseError(count_line.number, count_line.tokens[1].column, "vertex count too large");

    std::vector<Player> owner;
    owner.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        const auto& line = next("vertex line");
        expect_keyword(line, "vertex");
        expect_count(line, 3);
        const auto id = integer<std::uint32_t>(line, line.tokens[1], "vertex id");
        if (id >= n)
            throw ParseError(line.number, line.tokens[1].column,
                             "vertex id " + std::to_string(id) + " out of range [0," + std::to_string(n) + ")");
        if (id != v)
            throw ParseError(line.number, line.tokens[1].column,
                             "expected vertex " + std::to_string(v) + ", got " + std::to_string(id));
        const auto& who = line.tokens[2];
        if (who.text == "E") owner.push_back(Player::Eve);
        else if (who.text == "A") owner.push_back(Player::Adam);
        else throw ParseError(line.number, who.column, "expected owner E or A, got '" + std::string(who.text) + "'");
    }

    GraphBuilder builder(n, objective);
    const std::size_t arity = objective.arity();
    Color color(arity);
    while (at < lines.size()) {
        const auto& line = lines[at++];
        expect_keyword(line, "edge");
        VertexId ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
            const auto& tok = token_at(line, 1 + k, k == 0 ? "source vertex" : "target vertex");
            ends[k] = integer<std::uint32_t>(line, tok, "vertex id");
            if (ends[k] >= n)
                throw ParseError(line.number, tok.column,
                                 "vertex id " + std::to_string(ends[k]) + " out of range [0," + std::to_string(n) +
                                     ")");
        }
        const std::size_t given = line.tokens.size() < 3 ? 0 : line.tokens.size() - 3;
        if (given != arity) {
            const std::size_t col = given > arity ? line.tokens[3 + arity].column
                                                  : line.tokens.back().column + line.tokens.back().text.size();
            throw ParseError(line.number, col,
                             "objective " + objective.to_string() + " expects " + std::to_string(arity) +
                                 " colour component(s), got " + std::to_string(given));
        }
        for (std::size_t i = 0; i < arity; ++i) {
            const auto& tok = line.tokens[3 + i];
            color[i] = integer<std::int32_t>(line, tok, "colour integer");
            if (auto err = check_component(objective, i, color[i])) throw ParseError(line.number, tok.column, *err);
        }
        if (builder.contains(ends[0], ends[1], color))
            throw ParseError(line.number, line.tokens[0].column, "duplicate edge");
        builder.add_edge(ends[0], ends[1], color);
    }
    return Game(std::move(builder).build(), std::move(owner));
}

std::string
print_game(const Game& game)
{
    const auto& g = game.graph();
    std::string out = "sepgame 1\nobjective " + game.objective().to_string() + "\nvertices " +
                      std::to_string(g.vertex_count()) + "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out += "vertex " + std::to_string(v) + (game.owner(v) == Player::Eve ? " E\n" : " A\n");
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out += "edge " + std::to_string(g.source(e)) + " " + std::to_string(g.target(e));
        for (auto x : g.color(e)) out += " " + std::to_string(x);
        out += "\n";
    }
    return out;
}

} // namespace sepgame
