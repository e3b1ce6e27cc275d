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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asemin/lts.hpp"

namespace asemin {

/// Reachable synchronous product of traffic models.
///
/// A product state is a vector of component states, named "(x1,x2,...)";
/// a joint action is a vector of component actions, named "a1,a2,..."; the
/// output of a product state is the comma-joined vector of component outputs.
/// Component names containing ',', '(', ')' or '\' are backslash-escaped.
struct Composition {
  Lts product;
  std::vector<Lts> models;
  /// components[x] = component states of product state x
  std::vector<std::vector<StateId>> components;
  /// joint_actions[u] = component actions of product action u
  std::vector<std::vector<ActionId>> joint_actions;

  std::optional<StateId> find(std::span<const StateId> local) const;

 private:
  friend Composition compose(std::span<const Lts> models);
  std::map<std::vector<std::uint32_t>, StateId> index_;
};

/// Each component must use only the actions "w" and "s". Every component
/// resolves its own nondeterminism independently.
Composition compose(std::span<const Lts> models);

using StatePredicate = std::function<bool(const Lts&, StateId)>;

/// True when more than `channels` entries of the state's output vector are T.
StatePredicate collision_predicate(std::size_t channels);

struct GameResult {
  std::vector<char> winning_mask;
  /// Winning states, ascending.
  std::vector<StateId> winning;
  /// Chosen action per winning state; empty for losing states.
  std::vector<std::optional<ActionId>> strategy;
  bool schedulable = false;

  bool wins(StateId x) const { return winning_mask.at(x.value) != 0; }
};

/// Greatest fixed point of W = { x not bad | some enabled u has post(x,u) ⊆ W }.
/// States without enabled actions lose. The strategy takes the smallest safe
/// action of each winning state.
GameResult solve_safety(const Lts& game, const StatePredicate& bad);

/// Executable form of a solved scheduling game over component states.
class Scheduler {
 public:
  /// Throws ContractViolation unless `result` is schedulable.
  Scheduler(Composition game, GameResult result);

  /// Joint action for the current component states. Throws
  /// ContractViolation when the state is outside the winning region.
  std::vector<ActionId> decide(std::span<const StateId> local) const;

  /// Validates an observed environment move taken after `decide(local)` and
  /// returns the product state it lands in.
  StateId advance(std::span<const StateId> local, std::span<const StateId> next) const;

  const Composition& game() const { return game_; }
  const GameResult& result() const { return result_; }

 private:
  StateId locate(std::span<const StateId> local) const;

  Composition game_;
  GameResult result_;
};

inline Scheduler refine_strategy(Composition game, GameResult result) {
  return Scheduler(std::move(game), std::move(result));
}

}  // namespace asemin
