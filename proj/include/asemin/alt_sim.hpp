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

#include "asemin/lts.hpp"
#include "asemin/relation.hpp"

namespace asemin {

/// First failed requirement of an alternating simulation relation.
///  condition 1: initial state `right` of b has no related initial state in a
///  condition 2: (left, right) in R but H(left) != H(right)
///  condition 3: at (left, right), controller move `action` of a has no match
struct AsrViolation {
  int condition = 0;
  std::optional<StateId> left;
  std::optional<StateId> right;
  std::optional<ActionId> action;

  std::string describe(const Lts& a, const Lts& b) const;
};

/// Checks all three requirements for R to be an ASR from a to b.
/// Throws InputError if R's dimensions do not match the systems.
std::optional<AsrViolation> check_asr(const Lts& a, const Lts& b, const Relation& r);

/// Same check restricted to requirements (ii) and (iii).
std::optional<AsrViolation> check_asr_steps(const Lts& a, const Lts& b, const Relation& r);

/// Largest relation from a to b satisfying requirements (ii) and (iii).
/// Requirement (i) is deliberately not imposed; see ase_check.
Relation max_asr(const Lts& a, const Lts& b);

struct AseCheck {
  Relation forward;   ///< max_asr(a, b)
  Relation backward;  ///< max_asr(b, a)
  std::optional<AsrViolation> forward_violation;
  std::optional<AsrViolation> backward_violation;

  bool holds() const { return !forward_violation && !backward_violation; }
};

/// Alternating simulation equivalence with the witnessing maximal relations.
AseCheck ase_check(const Lts& a, const Lts& b);
inline bool ase_holds(const Lts& a, const Lts& b) { return ase_check(a, b).holds(); }

/// Classes of mutual membership in `mas`, which must be max_asr(s, s).
Partition as_equivalence_partition(const Lts& s, const Relation& mas);

}  // namespace asemin
