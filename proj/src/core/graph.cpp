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

#include "sepgame/core/graph.hpp"

#include <algorithm>
#include <string>

#include "sepgame/errors.hpp"

namespace sepgame {

GraphBuilder::GraphBuilder(std::size_t vertex_count, Objective alphabet, Duplicates policy)
    : alphabet_(alphabet), vertex_count_(vertex_count), policy_(policy)
{
    if (vertex_count > std::size_t{0xFFFFFFFF}) throw UsageError("too many vertices");
}

void
GraphBuilder::reserve(std::size_t edges)
{
    source_.reserve(edges);
    target_.reserve(edges);
    colors_.reserve(edges * alphabet_.arity());
}

VertexId
GraphBuilder::add_vertices(std::size_t k)
{
    if (k > std::size_t{0xFFFFFFFF} - vertex_count_) throw UsageError("too many vertices");
    const auto first = static_cast<VertexId>(vertex_count_);
    vertex_count_ += k;
    return first;
}

std::size_t
GraphBuilder::KeyHash::operator()(const std::vector<std::int64_t>& key) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : key) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::vector<std::int64_t>
GraphBuilder::key(VertexId src, VertexId dst, ColorView c) const
{
    std::vector<std::int64_t> k;
    k.reserve(2 + c.size());
    k.push_back(src);
    k.push_back(dst);
    k.insert(k.end(), c.begin(), c.end());
    return k;
}

bool
GraphBuilder::contains(VertexId src, VertexId dst, ColorView c) const
{
    if (policy_ == Duplicates::Allow) {
        for (std::size_t e = 0; e < target_.size(); ++e) {
            if (source_[e] != src || target_[e] != dst) continue;
            const auto k = alphabet_.arity();
            if (std::equal(c.begin(), c.end(), colors_.begin() + static_cast<std::ptrdiff_t>(e * k)))
                return true;
        }
        return false;
    }
    return seen_.contains(key(src, dst, c));
}

void
GraphBuilder::add_edge(VertexId src, VertexId dst, ColorView c)
{
    if (src >= vertex_count_ || dst >= vertex_count_) {
        throw UsageError("edge " + std::to_string(src) + " -> " + std::to_string(dst) +
                         " has an endpoint outside [0," + std::to_string(vertex_count_) + ")");
    }
    if (auto problem = alphabet_.check(c)) throw UsageError("bad edge colour: " + *problem);
    if (policy_ == Duplicates::Reject && !seen_.insert(key(src, dst, c)).second) {
        throw InvariantViolation("duplicate edge " + std::to_string(src) + " -> " + std::to_string(dst) +
                                 " with colour " + color_to_string(c));
    }
    source_.push_back(src);
    target_.push_back(dst);
    colors_.insert(colors_.end(), c.begin(), c.end());
}

Graph
GraphBuilder::build() &&
{
    Graph g;
    g.alphabet_ = alphabet_;
    g.vertex_count_ = vertex_count_;
    const std::size_t m = target_.size();
    const std::size_t k = alphabet_.arity();
    const std::size_t n = vertex_count_;

    g.out_begin_.assign(n + 1, 0);
    for (auto s : source_) ++g.out_begin_[s + 1];
    for (std::size_t v = 0; v < n; ++v) g.out_begin_[v + 1] += g.out_begin_[v];

    bool sorted = true;
    for (std::size_t e = 1; e < m && sorted; ++e) sorted = source_[e - 1] <= source_[e];

    if (sorted) {
        g.source_ = std::move(source_);
        g.target_ = std::move(target_);
        g.colors_ = std::move(colors_);
    } else {
        // stable counting sort by source
        std::vector<EdgeId> next(g.out_begin_.begin(), g.out_begin_.end() - 1);
        g.source_.resize(m);
        g.target_.resize(m);
        g.colors_.resize(m * k);
        for (std::size_t e = 0; e < m; ++e) {
            const EdgeId slot = next[source_[e]]++;
            g.source_[slot] = source_[e];
            g.target_[slot] = target_[e];
            for (std::size_t i = 0; i < k; ++i) g.colors_[slot * k + i] = colors_[e * k + i];
        }
    }

    g.in_begin_.assign(n + 1, 0);
    for (auto t : g.target_) ++g.in_begin_[t + 1];
    for (std::size_t v = 0; v < n; ++v) g.in_begin_[v + 1] += g.in_begin_[v];
    g.in_edges_.resize(m);
    std::vector<EdgeId> fill(g.in_begin_.begin(), g.in_begin_.end() - 1);
    for (std::size_t e = 0; e < m; ++e) g.in_edges_[fill[g.target_[e]]++] = static_cast<EdgeId>(e);

    seen_.clear();
    return g;
}

} // namespace sepgame
