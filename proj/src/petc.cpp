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

#include "asemin/petc.hpp"

#include <map>
#include <set>

#include "asemin/errors.hpp"

namespace asemin {

std::vector<std::string> validate(const TrafficSpec& spec) {
  std::vector<std::string> violations;
  std::map<std::string, const TrafficSpec::Region*> regions;
  for (const auto& r : spec.regions) {
    if (r.id.empty()) violations.push_back("region with empty id");
    if (!regions.emplace(r.id, &r).second) violations.push_back("duplicate region '" + r.id + "'");
    if (r.tau_low < 1 || r.tau_high < r.tau_low)
      violations.push_back("region '" + r.id + "': need 1 <= tau_low <= tau_high, got " +
                           std::to_string(r.tau_low) + ", " + std::to_string(r.tau_high));
  }
  std::set<std::pair<std::string, int>> covered;
  std::set<TrafficSpec::Step> seen;
  for (std::size_t i = 0; i < spec.delta.size(); ++i) {
    const auto& d = spec.delta[i];
    const std::string where = "delta " + std::to_string(i) + " (" + d.from + ", " +
                              std::to_string(d.tau) + ", " + d.to + ")";
    auto from = regions.find(d.from);
    if (from == regions.end()) {
      violations.push_back(where + ": unknown source region");
    } else if (d.tau < 1 || d.tau > from->second->tau_high) {
      violations.push_back(where + ": tau outside 1..tau_high");
    }
    if (!regions.contains(d.to)) violations.push_back(where + ": unknown target region");
    if (!seen.insert(d).second) violations.push_back(where + ": duplicate entry");
    covered.emplace(d.from, d.tau);
  }
  for (const auto& r : spec.regions) {
    for (int tau = 1; tau <= r.tau_high; ++tau) {
      if (!covered.contains({r.id, tau}))
        violations.push_back("region '" + r.id + "' has no successor at tau " + std::to_string(tau));
    }
  }
  return violations;
}

std::string clocked_state_name(std::string_view region, int clock) {
  return std::string(region) + "_" + std::to_string(clock);
}

namespace {

void require_valid(const TrafficSpec& spec) {
  if (auto v = validate(spec); !v.empty()) {
    std::string msg = "invalid traffic spec: " + v.front();
    throw InputError(msg, std::move(v));
  }
}

// `reduced` caps clocks at tau_low and leaves out the triggered samples
// that the environment takes under w.
Lts build_model(const TrafficSpec& spec, bool reduced) {
  require_valid(spec);
  std::map<std::string, int> last_clock;
  std::map<std::string, int> tau_low;
  LtsData d;
  d.actions = {kSample, kWait};
  for (const auto& r : spec.regions) {
    const int last = reduced ? r.tau_low : r.tau_high;
    last_clock[r.id] = last;
    tau_low[r.id] = r.tau_low;
    for (int c = 1; c <= last; ++c)
      d.states.push_back({clocked_state_name(r.id, c), c == 1 ? kTransmit : kIdle});
    if (r.initial) d.initial.push_back(clocked_state_name(r.id, 1));
    for (int c = 1; c < last; ++c)
      d.transitions.push_back({clocked_state_name(r.id, c), kWait, clocked_state_name(r.id, c + 1)});
  }
  std::set<LtsData::Edge> edges;
  for (const auto& step : spec.delta) {
    if (step.tau > last_clock[step.from]) continue;
    const auto src = clocked_state_name(step.from, step.tau);
    const auto dst = clocked_state_name(step.to, 1);
    edges.insert({src, kSample, dst});
    if (!reduced && step.tau >= tau_low[step.from]) edges.insert({src, kWait, dst});
  }
  for (const auto& e : d.transitions) edges.insert(e);
  d.transitions.assign(edges.begin(), edges.end());
  return Lts(d);
}

}  // namespace

Lts petc_traffic_model(const TrafficSpec& spec) { return build_model(spec, false); }

Lts petc_reduced_model(const TrafficSpec& spec) { return build_model(spec, true); }

Lts add_init_phase(const Lts& model, std::span<const StateId> targets, int t0) {
  if (t0 < 1) throw InputError("init phase length must be >= 1, got " + std::to_string(t0));
  LtsData d = model.data();
  auto chain = [](int k) { return "i_" + std::to_string(k); };
  for (int k = 1; k <= t0; ++k) {
    if (model.find_state(chain(k)))
      throw InputError("init phase state '" + chain(k) + "' clashes with a model state");
    d.states.push_back({chain(k), kIdle});
  }
  for (const char* a : {kSample, kWait})
    if (!model.find_action(a)) d.actions.emplace_back(a);
  for (int k = 1; k <= t0; ++k) {
    if (k < t0) d.transitions.push_back({chain(k), kWait, chain(k + 1)});
    for (auto x : targets) d.transitions.push_back({chain(k), kSample, model.name(x)});
  }
  d.initial = {chain(1)};
  return Lts(d);
}

Lts add_init_phase(const Lts& model, const TrafficSpec& spec, int t0) {
  std::vector<StateId> targets;
  for (const auto& r : spec.regions) targets.push_back(model.state(clocked_state_name(r.id, 1)));
  return add_init_phase(model, targets, t0);
}

TrafficSpec random_traffic_spec(std::mt19937_64& rng, const RandomSpecOptions& options) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  TrafficSpec spec;
  const int n = uniform(1, options.max_regions);
  for (int i = 0; i < n; ++i) {
    TrafficSpec::Region r;
    r.id = "q" + std::to_string(i);
    r.tau_high = uniform(1, options.max_tau_high);
    r.tau_low = uniform(1, r.tau_high);
    r.initial = uniform(0, 1) == 1;
    spec.regions.push_back(r);
  }
  spec.regions[uniform(0, n - 1)].initial = true;
  for (const auto& r : spec.regions) {
    for (int tau = 1; tau <= r.tau_high; ++tau) {
      std::set<int> targets;
      const int k = uniform(1, std::min(options.max_successors, n));
      while (static_cast<int>(targets.size()) < k) targets.insert(uniform(0, n - 1));
      for (int t : targets) spec.delta.push_back({r.id, tau, spec.regions[t].id});
    }
  }
  return spec;
}

}  // namespace asemin
