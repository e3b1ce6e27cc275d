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

// Reference implementations used only by the tests. They follow the
// definitions literally and trade speed for obviousness.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asemin/game.hpp"
#include "asemin/lts.hpp"
#include "asemin/relation.hpp"

namespace oracle {

using asemin::Lts;
using asemin::Relation;
using asemin::StateId;

/// Requirements (ii) and (iii) checked by direct quantifier expansion.
bool satisfies_steps(const Lts& a, const Lts& b, const Relation& r);

/// Union of every relation over equal-output pairs that satisfies (ii) and
/// (iii), by subset enumeration. Only for tiny systems (<= 20 candidate pairs).
Relation union_of_valid_relations(const Lts& a, const Lts& b);

/// Requirement (i) for a given relation.
bool initial_covered(const Lts& a, const Lts& b, const Relation& r);

/// ASE decided with the brute-force relation.
bool ase_brute(const Lts& a, const Lts& b);

/// System over states x0.., actions a,b.. and outputs y0, y1.. where
/// `outputs` encodes H bitwise (2 outputs) and `edges` selects transitions
/// from the lexicographic list of all (x, u, x') triples. Initial set {x0}.
Lts enumerated_system(int states, int actions, unsigned outputs, unsigned long edges);

/// Bounded-horizon safety game evaluated top-down with memoization; with
/// horizon |X| it equals the greatest fixed point.
std::vector<char> winning_by_game_tree(const Lts& game, const asemin::StatePredicate& bad);

/// Adds one duplicated state, one equally rational copy of an action and one
/// younger-sibling transition. nullopt when `s` offers no place for the
/// younger sibling.
std::optional<Lts> inflate(const Lts& s, std::mt19937_64& rng);

/// Every system with at most `max_states` states over the given action and
/// output names whose size is componentwise <= `bound` and different from it.
std::vector<Lts> systems_strictly_below(const asemin::SizeTriple& bound,
                                        const std::vector<std::string>& actions,
                                        const std::vector<std::string>& outputs);

/// Transitive closure of reflexive `edges` over `names`.
Relation reflexive_transitive_closure(const Lts& s,
                                      const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace oracle
