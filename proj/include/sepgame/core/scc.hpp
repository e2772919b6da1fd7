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

#include <cstdint>
#include <vector>

#include "sepgame/core/graph.hpp"

namespace sepgame {

/** Per-vertex component ids, numbered in topological order of the condensation. */
struct SccIndex
{
    std::vector<std::uint32_t> component_of;
    std::size_t count = 0;
};

/**
 * Tarjan's algorithm (iterative), restricted to the edges e with edge_mask[e]
 * set; an empty mask selects every edge. Component i precedes component j
 * whenever an edge leads from i to j.
 */
SccIndex scc_index(const Graph& g, const std::vector<bool>& edge_mask = {});

/** Maximal SCCs in topological order, each sorted by vertex id. */
std::vector<std::vector<VertexId>> scc_decompose(const Graph& g, const std::vector<bool>& edge_mask = {});

} // namespace sepgame
