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

#include <cstdint>
#include <utility>
#include <vector>

#include "asemin/lts.hpp"

namespace asemin {

/// A set of state pairs between a left and a right system, stored as a dense
/// bit matrix. Only the system sizes are recorded; callers keep the systems.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t left_size, std::size_t right_size)
      : left_(left_size), right_(right_size), bits_(left_size * right_size, 0) {}

  static Relation identity(std::size_t n) {
    Relation r(n, n);
    for (std::uint32_t i = 0; i < n; ++i) r.insert(StateId{i}, StateId{i});
    return r;
  }

  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return right_; }

  bool contains(StateId a, StateId b) const { return bits_[a.value * right_ + b.value] != 0; }
  void insert(StateId a, StateId b) { bits_[a.value * right_ + b.value] = 1; }
  void erase(StateId a, StateId b) { bits_[a.value * right_ + b.value] = 0; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
  }

  /// Lexicographically sorted pairs.
  std::vector<std::pair<StateId, StateId>> pairs() const {
    std::vector<std::pair<StateId, StateId>> out;
    for (std::uint32_t a = 0; a < left_; ++a)
      for (std::uint32_t b = 0; b < right_; ++b)
        if (contains(StateId{a}, StateId{b})) out.emplace_back(StateId{a}, StateId{b});
    return out;
  }

  bool operator==(const Relation&) const = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Disjoint nonempty blocks covering all states of one system.
struct Partition {
  /// Each block sorted; blocks ordered by their smallest member.
  std::vector<std::vector<StateId>> blocks;
  /// Block index of every state.
  std::vector<std::size_t> part_of;

  std::size_t block_of(StateId x) const { return part_of.at(x.value); }
};

}  // namespace asemin
