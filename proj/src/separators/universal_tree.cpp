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

#include "sepgame/separators/universal_tree.hpp"

#include <algorithm>
#include <limits>

#include "sepgame/combos/universal_sequence.hpp"
#include "sepgame/errors.hpp"

namespace sepgame {

UniversalTree::UniversalTree(std::uint32_t n, std::uint32_t height) : n_(n), height_(height)
{
    build(n, height);
}

std::uint64_t
UniversalTree::build(std::uint32_t m, std::uint32_t level)
{
    if (m == 0) return 0;
    if (level == 0) return 1;
    if (auto it = shapes_.find({m, level}); it != shapes_.end()) return it->second.prefix.back();

    Shape s;
    s.child_sizes = universal_sequence(m).values;
    s.prefix.reserve(s.child_sizes.size() + 1);
    s.prefix.push_back(0);
    for (auto x : s.child_sizes) {
        const auto below = build(x, level - 1);
        if (below > std::numeric_limits<std::uint64_t>::max() - s.prefix.back())
            throw GuardExceeded("universal tree has more than 2^64 leaves");
        s.prefix.push_back(s.prefix.back() + below);
    }
    const auto total = s.prefix.back();
    shapes_.emplace(std::make_pair(m, level), std::move(s));
    return total;
}

std::uint64_t
UniversalTree::leaf_count(std::uint32_t m, std::uint32_t level) const
{
    if (m == 0) return 0;
    if (level == 0) return 1;
    return shape(m, level).prefix.back();
}

const UniversalTree::Shape&
UniversalTree::shape(std::uint32_t m, std::uint32_t level) const
{
    return shapes_.at({m, level});
}

std::vector<std::uint32_t>
UniversalTree::leaf(std::uint64_t index) const
{
    if (index >= leaf_count()) throw UsageError("leaf index out of range");
    std::vector<std::uint32_t> tuple;
    tuple.reserve(height_);
    std::uint32_t m = n_;
    for (std::uint32_t level = height_; level > 0; --level) {
        const auto& s = shape(m, level);
        const auto c = static_cast<std::size_t>(std::upper_bound(s.prefix.begin(), s.prefix.end(), index) -
                                                s.prefix.begin()) - 1;
        tuple.push_back(static_cast<std::uint32_t>(c));
        index -= s.prefix[c];
        m = s.child_sizes[c];
    }
    return tuple;
}

std::optional<std::uint64_t>
UniversalTree::index_of(std::span<const std::uint32_t> tuple) const
{
    if (tuple.size() != height_ || n_ == 0) return std::nullopt;
    std::uint64_t index = 0;
    std::uint32_t m = n_;
    for (std::uint32_t level = height_; level > 0; --level) {
        const auto& s = shape(m, level);
        const auto c = tuple[height_ - level];
        if (c >= s.child_sizes.size()) return std::nullopt;
        index += s.prefix[c];
        m = s.child_sizes[c];
    }
    return index;
}

std::pair<std::uint64_t, std::uint64_t>
UniversalTree::block(std::uint64_t index, std::uint32_t depth) const
{
    std::uint64_t base = 0;
    std::uint32_t m = n_;
    std::uint32_t level = height_;
    for (std::uint32_t k = 0; k < depth; ++k, --level) {
        const auto& s = shape(m, level);
        const auto c = static_cast<std::size_t>(std::upper_bound(s.prefix.begin(), s.prefix.end(), index - base) -
                                                s.prefix.begin()) - 1;
        base += s.prefix[c];
        m = s.child_sizes[c];
    }
    return {base, base + leaf_count(m, level)};
}

UniversalTree::Node
UniversalTree::materialize(std::uint32_t m, std::uint32_t level) const
{
    Node node;
    if (level == 0) return node;
    for (auto x : shape(m, level).child_sizes) node.children.push_back(materialize(x, level - 1));
    return node;
}

UniversalTree::Node
UniversalTree::materialize() const
{
    if (leaf_count() > (1u << 20)) throw GuardExceeded("universal tree too large to materialize");
    if (n_ == 0) return Node{};
    return materialize(n_, height_);
}

} // namespace sepgame
