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

#include "asemin/minimize.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "asemin/alt_sim.hpp"
#include "asemin/errors.hpp"

namespace asemin {

bool action_dominated(const Lts& s, const Relation& mas, StateId p, ActionId lower,
                      ActionId upper) {
  auto upper_succ = s.post(p, upper);
  if (upper_succ.empty()) return false;
  auto lower_succ = s.post(p, lower);
  return std::all_of(upper_succ.begin(), upper_succ.end(), [&](StateId q) {
    return std::any_of(lower_succ.begin(), lower_succ.end(),
                       [&](StateId q2) { return mas.contains(q2, q); });
  });
}

QuotientResult step1_quotient(const Lts& s, const Relation& mas) {
  Partition part = as_equivalence_partition(s, mas);

  std::set<std::string> taken(s.state_names().begin(), s.state_names().end());
  std::vector<std::string> block_names;
  for (const auto& block : part.blocks) {
    if (block.size() == 1) {
      block_names.push_back(s.name(block.front()));
      continue;
    }
    std::string name = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) name += ',';
      name += s.name(block[i]);
    }
    name += '}';
    while (taken.contains(name)) name += '\'';
    taken.insert(name);
    block_names.push_back(std::move(name));
  }

  LtsData d;
  d.actions.assign(s.action_names().begin(), s.action_names().end());
  for (std::size_t b = 0; b < part.blocks.size(); ++b)
    d.states.push_back({block_names[b], s.output_name(part.blocks[b].front())});
  std::set<std::string> initial;
  for (auto x : s.initial()) initial.insert(block_names[part.part_of[x.value]]);
  d.initial.assign(initial.begin(), initial.end());
  // A block takes the outgoing transitions of one member only. Pooling the
  // moves of all members under a shared action label can hand the
  // environment successor combinations that no single member offers.
  auto moves_of = [&](StateId x) {
    std::set<LtsData::Edge> out;
    for (auto u : s.enabled(x))
      for (auto y : s.post(x, u))
        out.insert({block_names[part.part_of[x.value]], s.name(u), block_names[part.part_of[y.value]]});
    return out;
  };
  std::set<LtsData::Edge> edges;
  for (const auto& block : part.blocks) {
    std::set<LtsData::Edge> best = moves_of(block.front());
    for (std::size_t i = 1; i < block.size(); ++i) {
      auto candidate = moves_of(block[i]);
      if (candidate.size() < best.size()) best = std::move(candidate);
    }
    edges.insert(best.begin(), best.end());
  }
  d.transitions.assign(edges.begin(), edges.end());

  QuotientResult out{Lts(d), std::move(part), Relation{}};
  const auto& q = out.system;
  std::vector<StateId> block_state;
  for (const auto& name : block_names) block_state.push_back(q.state(name));

  out.mas = Relation(q.num_states(), q.num_states());
  const auto& blocks = out.partition.blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (mas.contains(blocks[i].front(), blocks[j].front()))
        out.mas.insert(block_state[i], block_state[j]);
  return out;
}

Lts step2_remove_controller_moves(const Lts& s, const Relation& mas) {
  std::vector<Transition> kept;
  kept.reserve(s.transitions().size());
  for (auto p : s.states()) {
    const auto moves = s.enabled(p);
    const std::size_t k = moves.size();
    std::vector<char> dom(k * k, 0);  // dom[i*k+j]: moves[i] ⊑ moves[j]
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        dom[i * k + j] = i == j || action_dominated(s, mas, p, moves[i], moves[j]);

    for (std::size_t i = 0; i < k; ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < k && keep; ++j) {
        if (j == i || !dom[i * k + j]) continue;
        // strictly dominated, or an equally good move with a smaller name exists
        if (!dom[j * k + i] || j < i) keep = false;
      }
      if (!keep) continue;
      for (auto q : s.post(p, moves[i])) kept.push_back({p, moves[i], q});
    }
  }
  return s.with_structure({s.initial().begin(), s.initial().end()}, std::move(kept));
}

namespace {

bool younger(const Relation& mas, StateId elder, StateId candidate) {
  return mas.contains(elder, candidate) && !mas.contains(candidate, elder);
}

bool has_elder(const Relation& mas, std::span<const StateId> siblings, StateId x) {
  return std::any_of(siblings.begin(), siblings.end(),
                     [&](StateId q) { return younger(mas, q, x); });
}

std::vector<char> reachable(const Lts& s) {
  std::vector<char> seen(s.num_states(), 0);
  std::deque<StateId> work;
  for (auto x : s.initial()) {
    seen[x.value] = 1;
    work.push_back(x);
  }
  while (!work.empty()) {
    auto x = work.front();
    work.pop_front();
    for (auto u : s.enabled(x)) {
      for (auto y : s.post(x, u)) {
        if (!seen[y.value]) {
          seen[y.value] = 1;
          work.push_back(y);
        }
      }
    }
  }
  return seen;
}

std::vector<LtsData::Edge> removed_edges(const Lts& before, const Lts& after) {
  std::vector<Transition> diff;
  std::set_difference(before.transitions().begin(), before.transitions().end(),
                      after.transitions().begin(), after.transitions().end(),
                      std::back_inserter(diff));
  std::vector<LtsData::Edge> out;
  for (const auto& t : diff)
    out.push_back({before.name(t.source), before.name(t.action), before.name(t.target)});
  return out;
}

StepRecord record(std::string name, const Lts& before, const Lts& after) {
  StepRecord r;
  r.name = std::move(name);
  r.before = before.size();
  r.after = after.size();
  r.tran_size_before = tran_size(before);
  r.tran_size_after = tran_size(after);
  return r;
}

}  // namespace

Lts step3_remove_younger_siblings(const Lts& s, const Relation& mas) {
  std::vector<Transition> kept;
  kept.reserve(s.transitions().size());
  for (auto p : s.states()) {
    for (auto u : s.enabled(p)) {
      const auto targets = s.post(p, u);
      for (auto q : targets)
        if (!has_elder(mas, targets, q)) kept.push_back({p, u, q});
    }
  }
  std::vector<StateId> initial;
  for (auto x : s.initial())
    if (!has_elder(mas, s.initial(), x)) initial.push_back(x);
  return s.with_structure(std::move(initial), std::move(kept));
}

Lts step4_prune_unreachable(const Lts& s) {
  const auto seen = reachable(s);
  std::vector<StateId> keep;
  for (auto x : s.states())
    if (seen[x.value]) keep.push_back(x);
  if (keep.size() == s.num_states()) return s;
  return restrict_to(s, keep);
}

Minimized minimize(const Lts& s) {
  ReductionTrace trace;
  const Relation mas = max_asr(s, s);
  trace.mas_pairs = mas.count();

  QuotientResult q = step1_quotient(s, mas);
  {
    StepRecord r = record("quotient", s, q.system);
    for (const auto& block : q.partition.blocks) {
      if (block.size() < 2) continue;
      auto& names = trace.merged_blocks.emplace_back();
      for (auto x : block) names.push_back(s.name(x));
      r.removed_states.insert(r.removed_states.end(), names.begin(), names.end());
    }
    trace.steps.push_back(std::move(r));
  }

  Lts s2 = step2_remove_controller_moves(q.system, q.mas);
  {
    StepRecord r = record("controller_moves", q.system, s2);
    r.removed_transitions = removed_edges(q.system, s2);
    trace.steps.push_back(std::move(r));
  }

  Lts s3 = step3_remove_younger_siblings(s2, q.mas);
  {
    StepRecord r = record("younger_siblings", s2, s3);
    r.removed_transitions = removed_edges(s2, s3);
    for (auto x : s2.initial())
      if (!s3.is_initial(x)) r.removed_initial.push_back(s2.name(x));
    trace.steps.push_back(std::move(r));
  }

  Lts s4 = step4_prune_unreachable(s3);
  {
    StepRecord r = record("unreachable", s3, s4);
    for (auto x : s3.states())
      if (!s4.find_state(s3.name(x))) r.removed_states.push_back(s3.name(x));
    r.removed_transitions = [&] {
      std::vector<LtsData::Edge> out;
      for (const auto& t : s3.transitions()) {
        LtsData::Edge e{s3.name(t.source), s3.name(t.action), s3.name(t.target)};
        auto src = s4.find_state(e.from);
        auto dst = s4.find_state(e.to);
        if (!src || !dst) out.push_back(std::move(e));
      }
      return out;
    }();
    trace.steps.push_back(std::move(r));
  }

  return {std::move(s4), std::move(trace)};
}

MinimalityReport check_n_conditions(const Lts& s) {
  MinimalityReport rep;
  const Relation mas = max_asr(s, s);

  for (auto p : s.states()) {
    for (auto q : s.states()) {
      if (q.value <= p.value) continue;
      if (mas.contains(p, q) && mas.contains(q, p)) {
        rep.n1 = false;
        rep.witnesses.push_back("N1: states '" + s.name(p) + "' and '" + s.name(q) +
                                "' are equivalent");
      }
    }
  }

  for (auto p : s.states()) {
    const auto moves = s.enabled(p);
    for (auto lower : moves) {
      for (auto upper : moves) {
        if (lower != upper && action_dominated(s, mas, p, lower, upper)) {
          rep.n2 = false;
          rep.witnesses.push_back("N2: at '" + s.name(p) + "' action '" + s.name(lower) +
                                  "' is dominated by '" + s.name(upper) + "'");
        }
      }
    }
  }

  for (auto p : s.states()) {
    for (auto u : s.enabled(p)) {
      const auto targets = s.post(p, u);
      for (auto elder : targets) {
        for (auto q : targets) {
          if (younger(mas, elder, q)) {
            rep.n3 = false;
            rep.witnesses.push_back("N3: transition ('" + s.name(p) + "', '" + s.name(u) +
                                    "', '" + s.name(q) + "') is a younger sibling of ('" +
                                    s.name(p) + "', '" + s.name(u) + "', '" + s.name(elder) +
                                    "')");
          }
        }
      }
    }
  }
  for (auto elder : s.initial()) {
    for (auto x : s.initial()) {
      if (younger(mas, elder, x)) {
        rep.n3 = false;
        rep.witnesses.push_back("N3: initial state '" + s.name(x) +
                                "' is a younger sibling of '" + s.name(elder) + "'");
      }
    }
  }

  const auto seen = reachable(s);
  for (auto x : s.states()) {
    if (!seen[x.value]) {
      rep.n4 = false;
      rep.witnesses.push_back("N4: state '" + s.name(x) + "' is unreachable");
    }
  }
  return rep;
}

}  // namespace asemin
