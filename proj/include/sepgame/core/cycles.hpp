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

#include <optional>
#include <vector>

#include "sepgame/core/graph.hpp"
#include "sepgame/core/path.hpp"

namespace sepgame {

/**
 * Some cycle of strictly negative total weight, as a lasso with an empty stem,
 * or nullopt. The weight is the scalar weight of mp / parity-mp colours, or
 * component `dimension` (0-based) of disj-mp colours. No minimality guarantee.
 */
std::optional<Lasso> find_negative_cycle(const Graph& g, std::optional<int> dimension = std::nullopt);

/** Same search over the edges selected by edge_mask, weighing colour slot `slot`. */
std::optional<Lasso> find_negative_cycle(const Graph& g, const std::vector<bool>& edge_mask, std::size_t slot);

/** A finite graph satisfies MP_N exactly when it has no negative cycle. */
bool graph_satisfies_mp(const Graph& g, std::optional<int> dimension = std::nullopt);

/** No cycle whose largest priority is odd. */
bool graph_satisfies_parity(const Graph& g);

} // namespace sepgame
