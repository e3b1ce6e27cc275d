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

#include "asemin/alt_sim.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "asemin/errors.hpp"

namespace asemin {

namespace {

// output_map[y_a] = matching output id in b, if any.
std::vector<std::optional<OutputId>> match_outputs(const Lts& a, const Lts& b) {
  std::vector<std::optional<OutputId>> out(a.num_outputs());
  for (std::uint32_t y = 0; y < a.num_outputs(); ++y) out[y] = b.find_output(a.name(OutputId{y}));
  return out;
}

bool same_output(const Lts& a, StateId xa, const Lts& b, StateId xb,
                 const std::vector<std::optional<OutputId>>& outputs) {
  auto m = outputs[a.output(xa).value];
  return m && *m == b.output(xb);
}

// Every environment answer to `ub` at xb is matched by one to `ua` at xa.
bool answers_match(const Lts& a, StateId xa, ActionId ua, const Lts& b, StateId xb, ActionId ub,
                   const Relation& r) {
  auto succ_a = a.post(xa, ua);
  for (auto xb2 : b.post(xb, ub)) {
    bool found = false;
    for (auto xa2 : succ_a) {
      if (r.contains(xa2, xb2)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::vector<StateId>> predecessors(const Lts& s) {
  std::vector<std::vector<StateId>> preds(s.num_states());
  for (const auto& t : s.transitions()) preds[t.target.value].push_back(t.source);
  for (auto& p : preds) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return preds;
}

void check_dimensions(const Lts& a, const Lts& b, const Relation& r) {
  if (r.left_size() != a.num_states() || r.right_size() != b.num_states())
    throw InputError("relation is " + std::to_string(r.left_size()) + "x" +
                     std::to_string(r.right_size()) + " but systems have " +
                     std::to_string(a.num_states()) + " and " + std::to_string(b.num_states()) +
                     " states");
}

}  // namespace

std::string AsrViolation::describe(const Lts& a, const Lts& b) const {
  switch (condition) {
    case 1:
      return "condition (i): initial state '" + b.name(*right) +
             "' is not related to any initial state";
    case 2:
      return "condition (ii): outputs differ on ('" + a.name(*left) + "', '" + b.name(*right) +
             "'): " + a.output_name(*left) + " != " + b.output_name(*right);
    case 3:
      return "condition (iii): at ('" + a.name(*left) + "', '" + b.name(*right) + "') action '" +
             a.name(*action) + "' has no matching action";
    default:
      return "no violation";
  }
}

std::optional<AsrViolation> check_asr_steps(const Lts& a, const Lts& b, const Relation& r) {
  check_dimensions(a, b, r);
  const auto outputs = match_outputs(a, b);
  const auto pairs = r.pairs();
  for (auto [xa, xb] : pairs) {
    if (!same_output(a, xa, b, xb, outputs)) return AsrViolation{2, xa, xb, std::nullopt};
  }
  for (auto [xa, xb] : pairs) {
    for (auto ua : a.enabled(xa)) {
      auto moves = b.enabled(xb);
      bool matched = std::any_of(moves.begin(), moves.end(), [&](ActionId ub) {
        return answers_match(a, xa, ua, b, xb, ub, r);
      });
      if (!matched) return AsrViolation{3, xa, xb, ua};
    }
  }
  return std::nullopt;
}

std::optional<AsrViolation> check_asr(const Lts& a, const Lts& b, const Relation& r) {
  check_dimensions(a, b, r);
  for (auto xb : b.initial()) {
    auto init = a.initial();
    bool matched =
        std::any_of(init.begin(), init.end(), [&](StateId xa) { return r.contains(xa, xb); });
    if (!matched) return AsrViolation{1, std::nullopt, xb, std::nullopt};
  }
  return check_asr_steps(a, b, r);
}

Relation max_asr(const Lts& a, const Lts& b) {
  const std::size_t na = a.num_states();
  const std::size_t nb = b.num_states();
  const std::size_t nu = a.num_actions();
  Relation r(na, nb);
  if (na == 0 || nb == 0) return r;

  const auto outputs = match_outputs(a, b);
  const auto preds_a = predecessors(a);
  const auto preds_b = predecessors(b);

  // witness[(pair, ua)] = position in b.enabled(xb) of the first action that
  // may still answer ua. The relation only shrinks, so a rejected answer
  // never becomes valid again and the cursor only moves forward.
  std::vector<std::uint16_t> witness(na * nb * nu, 0);
  std::vector<std::uint8_t> queued(na * nb, 0);
  std::deque<std::pair<StateId, StateId>> work;

  for (auto xa : a.states()) {
    for (auto xb : b.states()) {
      if (same_output(a, xa, b, xb, outputs)) {
        r.insert(xa, xb);
        queued[xa.value * nb + xb.value] = 1;
        work.emplace_back(xa, xb);
      }
    }
  }

  auto still_simulates = [&](StateId xa, StateId xb) {
    const auto moves = b.enabled(xb);
    for (auto ua : a.enabled(xa)) {
      auto& cursor = witness[(xa.value * nb + xb.value) * nu + ua.value];
      while (cursor < moves.size() && !answers_match(a, xa, ua, b, xb, moves[cursor], r)) ++cursor;
      if (cursor == moves.size()) return false;
    }
    return true;
  };

  while (!work.empty()) {
    auto [xa, xb] = work.front();
    work.pop_front();
    queued[xa.value * nb + xb.value] = 0;
    if (!r.contains(xa, xb) || still_simulates(xa, xb)) continue;
    r.erase(xa, xb);
    for (auto pa : preds_a[xa.value]) {
      for (auto pb : preds_b[xb.value]) {
        auto& q = queued[pa.value * nb + pb.value];
        if (!q && r.contains(pa, pb)) {
          q = 1;
          work.emplace_back(pa, pb);
        }
      }
    }
  }
  return r;
}

AseCheck ase_check(const Lts& a, const Lts& b) {
  AseCheck out;
  out.forward = max_asr(a, b);
  out.backward = max_asr(b, a);
  out.forward_violation = check_asr(a, b, out.forward);
  out.backward_violation = check_asr(b, a, out.backward);
  return out;
}

Partition as_equivalence_partition(const Lts& s, const Relation& mas) {
  check_dimensions(s, s, mas);
  constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
  Partition p;
  p.part_of.assign(s.num_states(), unassigned);
  for (auto x : s.states()) {
    if (p.part_of[x.value] != unassigned) continue;
    const std::size_t block = p.blocks.size();
    p.blocks.emplace_back();
    for (auto y : s.states()) {
      if (y.value < x.value || p.part_of[y.value] != unassigned) continue;
      if (y == x || (mas.contains(x, y) && mas.contains(y, x))) {
        p.part_of[y.value] = block;
        p.blocks.back().push_back(y);
      }
    }
  }
  return p;
}

}  // namespace asemin
