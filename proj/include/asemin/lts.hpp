/*
 * Copyright 2026 The asemin Authors
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

#include <compare>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asemin {

/// Dense index into one system's sorted symbol table. Index order equals
/// lexicographic order of the symbol names, so comparing ids of the same
/// system compares names.
template <class Tag>
struct Id {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const Id&) const = default;
};

using StateId = Id<struct StateTag>;
using ActionId = Id<struct ActionTag>;
using OutputId = Id<struct OutputTag>;

struct Transition {
  StateId source;
  ActionId action;
  StateId target;
  constexpr auto operator<=>(const Transition&) const = default;
};

/// (|X|, |X0|, |delta|), partially ordered componentwise.
struct SizeTriple {
  std::size_t states = 0;
  std::size_t initial = 0;
  std::size_t transitions = 0;

  bool operator==(const SizeTriple&) const = default;
  bool within(const SizeTriple& other) const {
    return states <= other.states && initial <= other.initial && transitions <= other.transitions;
  }
};

/// Name-level, unchecked description of a system. This is what parsers and
/// generators produce; `Lts` is only ever built from a valid one.
struct LtsData {
  struct State {
    std::string id;
    std::string output;
  };
  struct Edge {
    std::string from;
    std::string action;
    std::string to;
    auto operator<=>(const Edge&) const = default;
  };

  std::vector<State> states;
  std::vector<std::string> initial;
  std::vector<std::string> actions;
  std::vector<Edge> transitions;
};

/// Every violated invariant of `data`, in a stable order. Empty means valid.
std::vector<std::string> validate(const LtsData& data);

/// Finite labelled transition system (X, X0, U, Y, delta, H). Immutable
/// after construction; post/pre/enabled are O(1) span lookups.
class Lts {
 public:
  Lts() = default;
  /// Throws InputError carrying every violation if `data` is invalid.
  explicit Lts(const LtsData& data);

  std::size_t num_states() const { return state_names_.size(); }
  std::size_t num_actions() const { return action_names_.size(); }
  std::size_t num_outputs() const { return output_names_.size(); }

  auto states() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(num_states())) |
           std::views::transform([](std::uint32_t i) { return StateId{i}; });
  }
  auto actions() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(num_actions())) |
           std::views::transform([](std::uint32_t i) { return ActionId{i}; });
  }

  const std::string& name(StateId x) const;
  const std::string& name(ActionId u) const;
  const std::string& name(OutputId y) const;

  OutputId output(StateId x) const;
  const std::string& output_name(StateId x) const { return name(output(x)); }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;
  std::optional<OutputId> find_output(std::string_view name) const;
  /// Like find_*, but unknown names raise InputError.
  StateId state(std::string_view name) const;
  ActionId action(std::string_view name) const;

  std::span<const StateId> initial() const { return initial_; }
  bool is_initial(StateId x) const;

  /// Sorted by (source, action, target).
  std::span<const Transition> transitions() const { return transitions_; }

  std::span<const StateId> post(StateId x, ActionId u) const;
  std::span<const StateId> pre(StateId x, ActionId u) const;
  /// Actions with a nonempty successor set, ascending.
  std::span<const ActionId> enabled(StateId x) const;
  bool has_transition(StateId x, ActionId u, StateId target) const;

  SizeTriple size() const { return {num_states(), initial_.size(), transitions_.size()}; }

  std::span<const std::string> state_names() const { return state_names_; }
  std::span<const std::string> action_names() const { return action_names_; }

  /// Same states, actions and outputs; new initial set and transition set.
  /// Ids stay valid across the call.
  Lts with_structure(std::vector<StateId> initial, std::vector<Transition> transitions) const;

  LtsData data() const;

  friend bool operator==(const Lts& a, const Lts& b);

 private:
  void check(StateId x) const;
  void check(ActionId u) const;
  void build_indexes();

  std::vector<std::string> state_names_;
  std::vector<std::string> action_names_;
  std::vector<std::string> output_names_;
  std::vector<OutputId> output_of_;
  std::vector<StateId> initial_;
  std::vector<char> initial_mask_;
  std::vector<Transition> transitions_;

  // CSR adjacency keyed by state * num_actions + action.
  std::vector<std::uint32_t> post_offsets_;
  std::vector<StateId> post_targets_;
  std::vector<std::uint32_t> pre_offsets_;
  std::vector<StateId> pre_sources_;
  std::vector<std::uint32_t> enabled_offsets_;
  std::vector<ActionId> enabled_;
};

inline std::size_t tran_size(const Lts& s) { return s.transitions().size() + s.initial().size(); }

/// Induced subsystem on `keep`; initial states outside `keep` are dropped.
Lts restrict_to(const Lts& s, std::span<const StateId> keep);

}  // namespace asemin
