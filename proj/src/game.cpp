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

#include "asemin/game.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "asemin/errors.hpp"
#include "asemin/petc.hpp"

namespace asemin {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == ',' || c == '(' || c == ')' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <class Names>
std::string join(const Names& parts) {
  std::string out;
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ',';
    out += escape(p);
    first = false;
  }
  return out;
}

// Calls f for every element of the Cartesian product of `choices`.
template <class T, class F>
void for_each_product(const std::vector<std::vector<T>>& choices, F&& f) {
  for (const auto& c : choices)
    if (c.empty()) return;
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<T> pick(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) pick[i] = choices[i][pos[i]];
    f(pick);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

std::vector<std::uint32_t> key_of(std::span<const StateId> local) {
  std::vector<std::uint32_t> key;
  for (auto x : local) key.push_back(x.value);
  return key;
}

}  // namespace

std::optional<StateId> Composition::find(std::span<const StateId> local) const {
  auto it = index_.find(key_of(local));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Composition compose(std::span<const Lts> models) {
  if (models.empty()) throw InputError("compose: need at least one model");
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (const auto& a : models[i].action_names()) {
      if (a != kWait && a != kSample)
        throw InputError("compose: model " + std::to_string(i) + " uses foreign action '" + a +
                         "' (only 'w' and 's' are allowed)");
    }
  }
  const std::size_t p = models.size();

  auto state_name = [&](const std::vector<StateId>& v) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i) names.push_back(models[i].name(v[i]));
    return "(" + join(names) + ")";
  };
  auto output_name = [&](const std::vector<StateId>& v) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i) names.push_back(models[i].output_name(v[i]));
    return join(names);
  };
  auto action_name = [&](const std::vector<ActionId>& v) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p; ++i) names.push_back(models[i].name(v[i]));
    return join(names);
  };

  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::vector<std::vector<StateId>> found;
  std::deque<std::size_t> work;
  auto visit = [&](const std::vector<StateId>& v) {
    auto [it, fresh] = seen.emplace(key_of(v), found.size());
    if (fresh) {
      found.push_back(v);
      work.push_back(it->second);
    }
    return it->second;
  };

  std::vector<std::vector<StateId>> initial_choices;
  for (const auto& m : models) initial_choices.emplace_back(m.initial().begin(), m.initial().end());
  std::vector<std::size_t> initial;
  for_each_product(initial_choices, [&](const std::vector<StateId>& v) { initial.push_back(visit(v)); });

  std::map<std::vector<std::uint32_t>, std::vector<ActionId>> joint;
  struct Edge {
    std::size_t from;
    std::string action;
    std::size_t to;
  };
  std::vector<Edge> edges;
  while (!work.empty()) {
    const std::size_t idx = work.front();
    work.pop_front();
    const std::vector<StateId> here = found[idx];
    std::vector<std::vector<ActionId>> moves;
    for (std::size_t i = 0; i < p; ++i)
      moves.emplace_back(models[i].enabled(here[i]).begin(), models[i].enabled(here[i]).end());
    for_each_product(moves, [&](const std::vector<ActionId>& act) {
      std::vector<std::uint32_t> akey;
      for (auto a : act) akey.push_back(a.value);
      joint.emplace(akey, act);
      const std::string aname = action_name(act);
      std::vector<std::vector<StateId>> succ;
      for (std::size_t i = 0; i < p; ++i) {
        auto post = models[i].post(here[i], act[i]);
        succ.emplace_back(post.begin(), post.end());
      }
      for_each_product(succ, [&](const std::vector<StateId>& next) {
        edges.push_back({idx, aname, visit(next)});
      });
    });
  }

  LtsData d;
  std::set<std::string> names;
  for (const auto& v : found) {
    auto name = state_name(v);
    if (!names.insert(name).second) throw InputError("compose: ambiguous product state " + name);
    d.states.push_back({std::move(name), output_name(v)});
  }
  for (const auto& [key, act] : joint) d.actions.push_back(action_name(act));
  for (auto i : initial) d.initial.push_back(d.states[i].id);
  for (const auto& e : edges) d.transitions.push_back({d.states[e.from].id, e.action, d.states[e.to].id});

  Composition c;
  c.product = Lts(d);
  c.models.assign(models.begin(), models.end());
  c.components.resize(found.size());
  for (const auto& v : found) {
    const StateId x = c.product.state(state_name(v));
    c.components[x.value] = v;
    c.index_.emplace(key_of(v), x);
  }
  c.joint_actions.resize(c.product.num_actions());
  for (const auto& [key, act] : joint) c.joint_actions[c.product.action(action_name(act)).value] = act;
  return c;
}

StatePredicate collision_predicate(std::size_t channels) {
  if (channels < 1) throw InputError("collision predicate: channels must be >= 1");
  return [channels](const Lts& game, StateId x) {
    const std::string& out = game.output_name(x);
    std::size_t transmitting = 0;
    std::string field;
    auto flush = [&] {
      if (field == kTransmit) ++transmitting;
      field.clear();
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == '\\' && i + 1 < out.size()) {
        field += out[++i];
      } else if (out[i] == ',') {
        flush();
      } else {
        field += out[i];
      }
    }
    flush();
    return transmitting > channels;
  };
}

GameResult solve_safety(const Lts& game, const StatePredicate& bad) {
  const std::size_t n = game.num_states();
  const std::size_t na = game.num_actions();
  std::vector<char> losing(n, 0);
  std::vector<char> unsafe(n * na, 0);
  std::vector<std::size_t> safe_moves(n, 0);
  std::deque<StateId> work;

  for (auto x : game.states()) {
    safe_moves[x.value] = game.enabled(x).size();
    if (safe_moves[x.value] == 0 || bad(game, x)) {
      losing[x.value] = 1;
      work.push_back(x);
    }
  }
  // Backward attractor of the losing states.
  while (!work.empty()) {
    const StateId y = work.front();
    work.pop_front();
    for (auto u : game.actions()) {
      for (auto x : game.pre(y, u)) {
        if (losing[x.value] || unsafe[x.value * na + u.value]) continue;
        unsafe[x.value * na + u.value] = 1;
        if (--safe_moves[x.value] == 0) {
          losing[x.value] = 1;
          work.push_back(x);
        }
      }
    }
  }

  GameResult r;
  r.winning_mask.assign(n, 0);
  r.strategy.assign(n, std::nullopt);
  for (auto x : game.states()) {
    if (losing[x.value]) continue;
    r.winning_mask[x.value] = 1;
    r.winning.push_back(x);
    for (auto u : game.enabled(x)) {
      if (!unsafe[x.value * na + u.value]) {
        r.strategy[x.value] = u;
        break;
      }
    }
  }
  r.schedulable = std::all_of(game.initial().begin(), game.initial().end(),
                              [&](StateId x) { return r.winning_mask[x.value] != 0; });
  return r;
}

Scheduler::Scheduler(Composition game, GameResult result)
    : game_(std::move(game)), result_(std::move(result)) {
  if (!result_.schedulable) throw ContractViolation("scheduler requested for an unschedulable game");
  if (result_.winning_mask.size() != game_.product.num_states())
    throw ContractViolation("game result does not belong to this composition");
}

StateId Scheduler::locate(std::span<const StateId> local) const {
  if (local.size() != game_.models.size())
    throw ContractViolation("expected " + std::to_string(game_.models.size()) + " component states");
  auto x = game_.find(local);
  if (!x) throw ContractViolation("component states are not a reachable product state");
  if (!result_.wins(*x))
    throw ContractViolation("state " + game_.product.name(*x) + " is outside the winning region");
  return *x;
}

std::vector<ActionId> Scheduler::decide(std::span<const StateId> local) const {
  const StateId x = locate(local);
  return game_.joint_actions[result_.strategy[x.value]->value];
}

StateId Scheduler::advance(std::span<const StateId> local, std::span<const StateId> next) const {
  const StateId x = locate(local);
  const auto act = game_.joint_actions[result_.strategy[x.value]->value];
  if (next.size() != local.size()) throw ContractViolation("component count changed");
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (!game_.models[i].has_transition(local[i], act[i], next[i]))
      throw ContractViolation("component " + std::to_string(i) + " took no such transition");
  }
  return locate(next);
}

}  // namespace asemin
