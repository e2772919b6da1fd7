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

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <unordered_set>
#include <vector>

#include "sepgame/core/objective.hpp"

namespace sepgame {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/**
 * Finite edge-coloured directed graph G = (V, E), E a subset of V x C x V.
 *
 * Vertices are dense ids [0, vertex_count()). Edge ids are assigned when the
 * graph is built: edges are grouped by source, in insertion order within one
 * source, so out_edges(v) is a contiguous id range. Immutable once built.
 */
class Graph
{
  public:
    using EdgeRange = std::ranges::iota_view<EdgeId, EdgeId>;

    Graph() = default;

    const Objective& alphabet() const { return alphabet_; }
    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return target_.size(); }

    VertexId source(EdgeId e) const { return source_[e]; }
    VertexId target(EdgeId e) const { return target_[e]; }
    ColorView color(EdgeId e) const
    {
        const auto k = alphabet_.arity();
        return ColorView(colors_.data() + static_cast<std::size_t>(e) * k, k);
    }
    std::int32_t component(EdgeId e, std::size_t slot) const
    {
        return colors_[static_cast<std::size_t>(e) * alphabet_.arity() + slot];
    }

    EdgeRange out_edges(VertexId v) const { return {out_begin_[v], out_begin_[v + 1]}; }
    std::span<const EdgeId> in_edges(VertexId v) const
    {
        return std::span<const EdgeId>(in_edges_).subspan(in_begin_[v], in_begin_[v + 1] - in_begin_[v]);
    }
    std::size_t out_degree(VertexId v) const { return out_begin_[v + 1] - out_begin_[v]; }
    bool is_sink(VertexId v) const { return out_degree(v) == 0; }

  private:
    friend class GraphBuilder;

    Objective alphabet_;
    std::size_t vertex_count_ = 0;
    std::vector<VertexId> source_;
    std::vector<VertexId> target_;
    std::vector<std::int32_t> colors_;
    std::vector<EdgeId> out_begin_{0};
    std::vector<EdgeId> in_begin_{0};
    std::vector<EdgeId> in_edges_;
};

/**
 * Accumulates edges, validates them, and produces an immutable Graph.
 *
 * Edges are a set: adding (src, colour, dst) twice is an InvariantViolation
 * unless the builder was created with Duplicates::Allow, which the chained
 * game uses to keep one product edge per originating game edge.
 */
class GraphBuilder
{
  public:
    enum class Duplicates { Reject, Allow };

    GraphBuilder(std::size_t vertex_count, Objective alphabet, Duplicates policy = Duplicates::Reject);

    void reserve(std::size_t edges);
    /** Appends k fresh vertices; returns the id of the first one. */
    VertexId add_vertices(std::size_t k);
    void add_edge(VertexId src, VertexId dst, ColorView c);
    bool contains(VertexId src, VertexId dst, ColorView c) const;

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return target_.size(); }
    const Objective& alphabet() const { return alphabet_; }

    Graph build() &&;

  private:
    struct KeyHash
    {
        std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept;
    };

    std::vector<std::int64_t> key(VertexId src, VertexId dst, ColorView c) const;

    Objective alphabet_;
    std::size_t vertex_count_;
    Duplicates policy_;
    std::vector<VertexId> source_;
    std::vector<VertexId> target_;
    std::vector<std::int32_t> colors_;
    std::unordered_set<std::vector<std::int64_t>, KeyHash> seen_;
};

} // namespace sepgame
