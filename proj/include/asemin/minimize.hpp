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

#include <optional>
#include <string>
#include <vector>

#include "asemin/lts.hpp"
#include "asemin/relation.hpp"

namespace asemin {

/// (p, lower) ⊑ (p, upper) under `mas`: every successor of p under `upper`
/// alternately simulates some successor of p under `lower`. `lower` is then
/// at most as good a controller move as `upper`.
bool action_dominated(const Lts& s, const Relation& mas, StateId p, ActionId lower, ActionId upper);

struct QuotientResult {
  Lts system;
  Partition partition;  ///< blocks of the input system, indexed as in the input
  Relation mas;         ///< input mas mapped onto the quotient's states (a partial order)
};

/// Merges every class of mutually simulating states into one state. A
/// multi-member block is named "{a,b,...}" from its sorted member names and
/// keeps the outgoing transitions of the member with the fewest of them
/// (first by name on ties). Initial blocks are those holding an initial state.
QuotientResult step1_quotient(const Lts& s, const Relation& mas);

/// Drops transitions of strictly dominated actions, then keeps only the
/// lexicographically smallest action of each class of equally good ones.
Lts step2_remove_controller_moves(const Lts& s, const Relation& mas);

/// Drops every transition (p,u,q') with a sibling (p,u,q) such that
/// (q,q') ∈ mas and (q',q) ∉ mas, and likewise for initial states.
Lts step3_remove_younger_siblings(const Lts& s, const Relation& mas);

/// Restricts to states reachable from the initial set.
Lts step4_prune_unreachable(const Lts& s);

struct StepRecord {
  std::string name;
  SizeTriple before;
  SizeTriple after;
  std::size_t tran_size_before = 0;
  std::size_t tran_size_after = 0;
  std::vector<LtsData::Edge> removed_transitions;
  std::vector<std::string> removed_initial;
  std::vector<std::string> removed_states;
};

struct ReductionTrace {
  std::size_t mas_pairs = 0;
  /// Step 1 blocks by member name, only multi-member blocks.
  std::vector<std::vector<std::string>> merged_blocks;
  std::vector<StepRecord> steps;
};

struct Minimized {
  Lts system;
  ReductionTrace trace;
};

/// Steps 0-4. The maximal relation is computed once and carried through the
/// later steps (mapped onto blocks after Step 1).
Minimized minimize(const Lts& s);

struct MinimalityReport {
  bool n1 = true;  ///< no two distinct states are AS-equivalent
  bool n2 = true;  ///< no irrational or redundant controller moves
  bool n3 = true;  ///< no younger-sibling transitions or initial states
  bool n4 = true;  ///< every state reachable from an initial state
  std::vector<std::string> witnesses;

  bool all() const { return n1 && n2 && n3 && n4; }
};

/// Evaluates the four necessary conditions against a fresh max_asr(s, s).
MinimalityReport check_n_conditions(const Lts& s);

/// Bijective alternating bisimulation isomorphism witness.
struct Babi {
  struct StatePair {
    StateId left;
    StateId right;
    std::vector<std::pair<ActionId, ActionId>> actions;
  };
  /// One entry per left state, ascending.
  std::vector<StatePair> states;

  StateId image(StateId left) const { return states.at(left.value).right; }
};

/// Backtracking search for a BABI from a to b. Intended for small systems.
std::optional<Babi> find_babi(const Lts& a, const Lts& b);

/// Checks the three BABI conditions for a candidate witness.
bool is_babi(const Lts& a, const Lts& b, const Babi& w);

}  // namespace asemin
