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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepgame/core/graph.hpp"
#include "sepgame/core/objective.hpp"
#include "sepgame/core/path.hpp"

namespace sepgame {

using StateId = std::uint64_t;

/**
 * Transition structure behind a SafetyAutomaton. Generated families compute
 * delta on the fly; implementations must be immutable and reentrant.
 */
class AutomatonImpl
{
  public:
    virtual ~AutomatonImpl() = default;

    virtual const Objective& alphabet() const = 0;
    virtual StateId state_count() const = 0;
    virtual StateId initial() const = 0;
    /** delta(q, c), or nullopt where the partial function is undefined. c is an admitted letter. */
    virtual std::optional<StateId> step(StateId q, ColorView c) const = 0;
    virtual std::string state_label(StateId q) const { return std::to_string(q); }
};

/**
 * Deterministic safety automaton (Q, q0, delta) with partial delta. A value
 * type: copies share the immutable transition structure.
 */
class SafetyAutomaton
{
  public:
    explicit SafetyAutomaton(std::shared_ptr<const AutomatonImpl> impl);

    const Objective& alphabet() const { return impl_->alphabet(); }
    StateId state_count() const { return impl_->state_count(); }
    StateId initial() const { return impl_->initial(); }
    std::optional<StateId> delta(StateId q, ColorView c) const { return impl_->step(q, c); }
    std::string state_label(StateId q) const { return impl_->state_label(q); }

    const AutomatonImpl& impl() const { return *impl_; }
    const std::shared_ptr<const AutomatonImpl>& shared() const { return impl_; }

  private:
    std::shared_ptr<const AutomatonImpl> impl_;
};

/** delta*(q0, word); nullopt as soon as a step is undefined. Letters are checked. */
std::optional<StateId> run(const SafetyAutomaton& aut, std::span<const Color> word);
std::optional<StateId> run_from(const SafetyAutomaton& aut, StateId q, std::span<const Color> word);

/**
 * Some finite path of g whose colours drive aut from its initial state into an
 * undefined transition, found by exploring the synchronized product from every
 * (v, q0); nullopt if there is none.
 */
std::optional<FinitePath> find_rejected_path(const SafetyAutomaton& aut, const Graph& g);

/** Every path of g, from every vertex, has a defined run. */
bool accepts_all_paths(const SafetyAutomaton& aut, const Graph& g);

/** Graph induced by the states reachable from q0; vertex 0 is q0. */
struct ReachableAutomaton
{
    Graph graph;
    std::vector<StateId> state;
};

/** Enumerates the alphabet, so only for automata over small alphabets. */
ReachableAutomaton reachable_automaton(const SafetyAutomaton& aut, std::size_t max_states = 1u << 22);

} // namespace sepgame
