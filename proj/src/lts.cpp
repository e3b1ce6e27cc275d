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

#include "asemin/lts.hpp"

#include <algorithm>
#include <set>

#include "asemin/errors.hpp"

namespace asemin {

namespace {

template <class IdT>
std::optional<IdT> lookup(const std::vector<std::string>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) return std::nullopt;
  return IdT{static_cast<std::uint32_t>(it - sorted.begin())};
}

}  // namespace

std::vector<std::string> validate(const LtsData& data) {
  std::vector<std::string> violations;
  std::set<std::string_view> states;
  for (const auto& st : data.states) {
    if (st.id.empty()) violations.push_back("state with empty id");
    if (!states.insert(st.id).second) violations.push_back("duplicate state '" + st.id + "'");
  }
  std::set<std::string_view> actions;
  for (const auto& a : data.actions) {
    if (a.empty()) violations.push_back("action with empty id");
    if (!actions.insert(a).second) violations.push_back("duplicate action '" + a + "'");
  }
  std::set<std::string_view> initial;
  for (const auto& x : data.initial) {
    if (!states.contains(x)) violations.push_back("initial state unknown: '" + x + "'");
    if (!initial.insert(x).second) violations.push_back("duplicate initial state '" + x + "'");
  }
  std::set<LtsData::Edge> edges;
  for (std::size_t i = 0; i < data.transitions.size(); ++i) {
    const auto& e = data.transitions[i];
    const std::string where =
        "transition " + std::to_string(i) + " (" + e.from + ", " + e.action + ", " + e.to + ")";
    if (!states.contains(e.from)) violations.push_back(where + ": unknown source state");
    if (!actions.contains(e.action)) violations.push_back(where + ": unknown action");
    if (!states.contains(e.to)) violations.push_back(where + ": unknown target state");
    if (!edges.insert(e).second) violations.push_back(where + ": duplicate transition");
  }
  return violations;
}

Lts::Lts(const LtsData& data) {
  if (auto violations = validate(data); !violations.empty()) {
    std::string msg = "invalid transition system: " + violations.front();
    if (violations.size() > 1) msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw InputError(msg, std::move(violations));
  }

  std::vector<const LtsData::State*> sorted_states;
  sorted_states.reserve(data.states.size());
  for (const auto& st : data.states) sorted_states.push_back(&st);
  std::sort(sorted_states.begin(), sorted_states.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  std::set<std::string> outputs;
  for (const auto* st : sorted_states) {
    state_names_.push_back(st->id);
    outputs.insert(st->output);
  }
  output_names_.assign(outputs.begin(), outputs.end());
  for (const auto* st : sorted_states)
    output_of_.push_back(*lookup<OutputId>(output_names_, st->output));

  action_names_ = data.actions;
  std::sort(action_names_.begin(), action_names_.end());

  for (const auto& x : data.initial) initial_.push_back(*lookup<StateId>(state_names_, x));
  for (const auto& e : data.transitions) {
    transitions_.push_back({*lookup<StateId>(state_names_, e.from),
                            *lookup<ActionId>(action_names_, e.action),
                            *lookup<StateId>(state_names_, e.to)});
  }
  build_indexes();
}

void Lts::build_indexes() {
  std::sort(initial_.begin(), initial_.end());
  initial_.erase(std::unique(initial_.begin(), initial_.end()), initial_.end());
  initial_mask_.assign(num_states(), 0);
  for (auto x : initial_) initial_mask_[x.value] = 1;

  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  const std::size_t n = num_states();
  const std::size_t na = num_actions();
  const std::size_t keys = n * na;

  post_offsets_.assign(keys + 1, 0);
  pre_offsets_.assign(keys + 1, 0);
  for (const auto& t : transitions_) {
    ++post_offsets_[t.source.value * na + t.action.value + 1];
    ++pre_offsets_[t.target.value * na + t.action.value + 1];
  }
  for (std::size_t k = 0; k < keys; ++k) {
    post_offsets_[k + 1] += post_offsets_[k];
    pre_offsets_[k + 1] += pre_offsets_[k];
  }
  // transitions_ is sorted by (source, action, target): targets come out sorted.
  post_targets_.clear();
  post_targets_.reserve(transitions_.size());
  for (const auto& t : transitions_) post_targets_.push_back(t.target);

  pre_sources_.assign(transitions_.size(), StateId{});
  std::vector<std::uint32_t> fill(pre_offsets_.begin(), pre_offsets_.end() - 1);
  for (const auto& t : transitions_) pre_sources_[fill[t.target.value * na + t.action.value]++] = t.source;

  enabled_offsets_.assign(n + 1, 0);
  enabled_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t u = 0; u < na; ++u) {
      if (post_offsets_[x * na + u + 1] != post_offsets_[x * na + u])
        enabled_.push_back(ActionId{static_cast<std::uint32_t>(u)});
    }
    enabled_offsets_[x + 1] = static_cast<std::uint32_t>(enabled_.size());
  }
}

void Lts::check(StateId x) const {
  if (x.value >= num_states())
    throw InputError("unknown state id " + std::to_string(x.value));
}

void Lts::check(ActionId u) const {
  if (u.value >= num_actions())
    throw InputError("unknown action id " + std::to_string(u.value));
}

const std::string& Lts::name(StateId x) const {
  check(x);
  return state_names_[x.value];
}

const std::string& Lts::name(ActionId u) const {
  check(u);
  return action_names_[u.value];
}

const std::string& Lts::name(OutputId y) const {
  if (y.value >= output_names_.size()) throw InputError("unknown output id " + std::to_string(y.value));
  return output_names_[y.value];
}

OutputId Lts::output(StateId x) const {
  check(x);
  return output_of_[x.value];
}

std::optional<StateId> Lts::find_state(std::string_view name) const {
  return lookup<StateId>(state_names_, name);
}

std::optional<ActionId> Lts::find_action(std::string_view name) const {
  return lookup<ActionId>(action_names_, name);
}

std::optional<OutputId> Lts::find_output(std::string_view name) const {
  return lookup<OutputId>(output_names_, name);
}

StateId Lts::state(std::string_view name) const {
  if (auto x = find_state(name)) return *x;
  throw InputError("unknown state '" + std::string(name) + "'");
}

ActionId Lts::action(std::string_view name) const {
  if (auto u = find_action(name)) return *u;
  throw InputError("unknown action '" + std::string(name) + "'");
}

bool Lts::is_initial(StateId x) const {
  check(x);
  return initial_mask_[x.value] != 0;
}

std::span<const StateId> Lts::post(StateId x, ActionId u) const {
  check(x);
  check(u);
  const std::size_t k = x.value * num_actions() + u.value;
  return {post_targets_.data() + post_offsets_[k], post_offsets_[k + 1] - post_offsets_[k]};
}

std::span<const StateId> Lts::pre(StateId x, ActionId u) const {
  check(x);
  check(u);
  const std::size_t k = x.value * num_actions() + u.value;
  return {pre_sources_.data() + pre_offsets_[k], pre_offsets_[k + 1] - pre_offsets_[k]};
}

std::span<const ActionId> Lts::enabled(StateId x) const {
  check(x);
  return {enabled_.data() + enabled_offsets_[x.value],
          enabled_offsets_[x.value + 1] - enabled_offsets_[x.value]};
}

bool Lts::has_transition(StateId x, ActionId u, StateId target) const {
  auto succ = post(x, u);
  return std::binary_search(succ.begin(), succ.end(), target);
}

Lts Lts::with_structure(std::vector<StateId> initial, std::vector<Transition> transitions) const {
  for (auto x : initial) check(x);
  for (const auto& t : transitions) {
    check(t.source);
    check(t.action);
    check(t.target);
  }
  Lts out;
  out.state_names_ = state_names_;
  out.action_names_ = action_names_;
  out.output_names_ = output_names_;
  out.output_of_ = output_of_;
  out.initial_ = std::move(initial);
  out.transitions_ = std::move(transitions);
  out.build_indexes();
  return out;
}

LtsData Lts::data() const {
  LtsData d;
  for (auto x : states()) d.states.push_back({name(x), output_name(x)});
  for (auto x : initial_) d.initial.push_back(name(x));
  d.actions = action_names_;
  for (const auto& t : transitions_)
    d.transitions.push_back({name(t.source), name(t.action), name(t.target)});
  return d;
}

bool operator==(const Lts& a, const Lts& b) {
  return a.state_names_ == b.state_names_ && a.action_names_ == b.action_names_ &&
         a.output_names_ == b.output_names_ && a.output_of_ == b.output_of_ &&
         a.initial_ == b.initial_ && a.transitions_ == b.transitions_;
}

Lts restrict_to(const Lts& s, std::span<const StateId> keep) {
  std::vector<char> mask(s.num_states(), 0);
  for (auto x : keep) {
    if (x.value >= s.num_states())
      throw InputError("restrict: unknown state id " + std::to_string(x.value));
    mask[x.value] = 1;
  }
  LtsData d;
  d.actions.assign(s.action_names().begin(), s.action_names().end());
  for (auto x : s.states())
    if (mask[x.value]) d.states.push_back({s.name(x), s.output_name(x)});
  for (auto x : s.initial())
    if (mask[x.value]) d.initial.push_back(s.name(x));
  for (const auto& t : s.transitions())
    if (mask[t.source.value] && mask[t.target.value])
      d.transitions.push_back({s.name(t.source), s.name(t.action), s.name(t.target)});
  return Lts(d);
}

}  // namespace asemin
