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
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepgame/automaton/automaton.hpp"

namespace sepgame::detail {

/** Numbering of (vertex, state) pairs: a flat table when n * |Q| is small, a hash map otherwise. */
class PairIndex
{
  public:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 25;

    PairIndex() = default;
    PairIndex(std::size_t vertex_count, StateId state_count) : states_(state_count)
    {
        if (state_count != 0 && vertex_count <= kDenseLimit / state_count)
            dense_.assign(vertex_count * state_count, kAbsent);
    }

    std::optional<std::uint32_t> find(std::uint32_t v, StateId q) const
    {
        if (!dense_.empty()) {
            const auto id = dense_[v * states_ + q];
            if (id == kAbsent) return std::nullopt;
            return id;
        }
        auto it = sparse_.find({v, q});
        if (it == sparse_.end()) return std::nullopt;
        return it->second;
    }

    /** Returns the existing id of (v, q), or assigns `fresh` and reports insertion. */
    std::pair<std::uint32_t, bool> insert(std::uint32_t v, StateId q, std::uint32_t fresh)
    {
        if (!dense_.empty()) {
            auto& slot = dense_[v * states_ + q];
            if (slot != kAbsent) return {slot, false};
            slot = fresh;
            return {fresh, true};
        }
        auto [it, inserted] = sparse_.try_emplace({v, q}, fresh);
        return {it->second, inserted};
    }

  private:
    struct Hash
    {
        std::size_t operator()(const std::pair<std::uint32_t, StateId>& p) const noexcept
        {
            std::uint64_t h = p.second * 0x9e3779b97f4a7c15ull;
            h ^= (static_cast<std::uint64_t>(p.first) + 0x632be59bd9b4e019ull) * 0xbf58476d1ce4e5b9ull;
            return static_cast<std::size_t>(h ^ (h >> 31));
        }
    };

    StateId states_ = 0;
    std::vector<std::uint32_t> dense_;
    std::unordered_map<std::pair<std::uint32_t, StateId>, std::uint32_t, Hash> sparse_;
};

} // namespace sepgame::detail
