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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sepgame {

/**
 * Universal ordered tree U(n, h): every ordered tree of height h with at most
 * n leaves, all at depth h, embeds into it preserving order and depth.
 *
 *   U(0, h) is empty, U(n, 0) is a single leaf, and the root of U(n, h) has
 *   the root children of U(floor(n/2), h), then a child carrying U(n, h-1),
 *   then the root children of U(n-1-floor(n/2), h).
 *
 * Unfolding the recursion, the root children of U(n, h) are U(x, h-1) for x
 * ranging over the universal sequence u_n. Leaves are never enumerated: the
 * tree stores, per distinct subtree shape, the prefix sums of its children's
 * leaf counts, and answers leaf queries by descending those.
 *
 * A leaf is the tuple (x_h, ..., x_1) of child positions from the root down;
 * leaf indices follow the lexicographic order of these tuples.
 */
class UniversalTree
{
  public:
    UniversalTree(std::uint32_t n, std::uint32_t height);

    std::uint32_t n() const { return n_; }
    std::uint32_t height() const { return height_; }
    std::uint64_t leaf_count() const { return leaf_count(n_, height_); }

    /** (x_h, ..., x_1) of the leaf with the given index. */
    std::vector<std::uint32_t> leaf(std::uint64_t index) const;
    std::optional<std::uint64_t> index_of(std::span<const std::uint32_t> tuple) const;

    /**
     * Leaf indices [first, last) of the leaves agreeing with leaf `index` on
     * the first `depth` components (x_h, ..., x_{h-depth+1}).
     */
    std::pair<std::uint64_t, std::uint64_t> block(std::uint64_t index, std::uint32_t depth) const;

    /** Explicit tree, for small instances. */
    struct Node
    {
        std::vector<Node> children;
    };
    Node materialize() const;

  private:
    struct Shape
    {
        std::vector<std::uint32_t> child_sizes;
        std::vector<std::uint64_t> prefix; // leaves before child i; back() = total
    };

    std::uint64_t leaf_count(std::uint32_t m, std::uint32_t level) const;
    const Shape& shape(std::uint32_t m, std::uint32_t level) const;
    std::uint64_t build(std::uint32_t m, std::uint32_t level);
    Node materialize(std::uint32_t m, std::uint32_t level) const;

    std::uint32_t n_;
    std::uint32_t height_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Shape> shapes_;
};

} // namespace sepgame
