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

#pragma once

#include <vector>

#include "sepgame/core/graph.hpp"

namespace sepgame {

/** Finite path v0 c0 v1 ... v_len, stored as its start vertex and edge ids. */
struct FinitePath
{
    VertexId start = 0;
    std::vector<EdgeId> edges;

    std::size_t length() const { return edges.size(); }
    VertexId last(const Graph& g) const { return edges.empty() ? start : g.target(edges.back()); }
    std::vector<Color> colors(const Graph& g) const;
    bool valid_in(const Graph& g) const;
};

/** Ultimately periodic infinite path: stem, then the cycle repeated forever. */
struct Lasso
{
    VertexId start = 0;
    std::vector<EdgeId> stem;
    std::vector<EdgeId> cycle;

    VertexId cycle_start(const Graph& g) const { return stem.empty() ? start : g.target(stem.back()); }
    bool valid_in(const Graph& g) const;
};

/** Sum of the colour component at `slot` along a sequence of edges. */
std::int64_t sum_component(const Graph& g, const std::vector<EdgeId>& edges, std::size_t slot);

} // namespace sepgame
