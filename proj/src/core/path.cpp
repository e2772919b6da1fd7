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

#include "sepgame/core/path.hpp"

namespace sepgame {

namespace {

bool
chained_from(const Graph& g, VertexId at, const std::vector<EdgeId>& edges, VertexId& end)
{
    for (auto e : edges) {
        if (e >= g.edge_count() || g.source(e) != at) return false;
        at = g.target(e);
    }
    end = at;
    return true;
}

} // namespace

std::vector<Color>
FinitePath::colors(const Graph& g) const
{
    std::vector<Color> out;
    out.reserve(edges.size());
    for (auto e : edges) {
        auto c = g.color(e);
        out.emplace_back(c.begin(), c.end());
    }
    return out;
}

bool
FinitePath::valid_in(const Graph& g) const
{
    VertexId end = 0;
    return start < g.vertex_count() && chained_from(g, start, edges, end);
}

bool
Lasso::valid_in(const Graph& g) const
{
    if (start >= g.vertex_count() || cycle.empty()) return false;
    VertexId loop = 0;
    if (!chained_from(g, start, stem, loop)) return false;
    VertexId back = 0;
    return chained_from(g, loop, cycle, back) && back == loop;
}

std::int64_t
sum_component(const Graph& g, const std::vector<EdgeId>& edges, std::size_t slot)
{
    std::int64_t total = 0;
    for (auto e : edges) total += g.component(e, slot);
    return total;
}

} // namespace sepgame
