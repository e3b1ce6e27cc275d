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

#include <random>
#include <span>
#include <string>
#include <vector>

#include "asemin/lts.hpp"

namespace asemin {

/// Traffic abstraction of one sampled-data loop: regions with their earliest
/// and latest trigger step, and the region transitions reachable when the
/// loop is sampled after `tau` steps.
struct TrafficSpec {
  struct Region {
    std::string id;
    int tau_low = 1;
    int tau_high = 1;
    bool initial = false;
  };
  struct Step {
    std::string from;
    int tau = 1;
    std::string to;
    auto operator<=>(const Step&) const = default;
  };

  std::vector<Region> regions;
  std::vector<Step> delta;
};

/// Every violated invariant of `spec`; empty when valid.
std::vector<std::string> validate(const TrafficSpec& spec);

inline constexpr const char* kWait = "w";
inline constexpr const char* kSample = "s";
inline constexpr const char* kTransmit = "T";
inline constexpr const char* kIdle = "W";

/// Name of the clocked state (region, clock): "<region>_<clock>".
std::string clocked_state_name(std::string_view region, int clock);

/// Full model: clocks 1..tau_high, wait/sample/trigger transitions, output T
/// exactly at clock 1 (the step right after a sample). Throws InputError on
/// an invalid spec.
Lts petc_traffic_model(const TrafficSpec& spec);

/// Clocks capped at tau_low and no triggered transitions.
Lts petc_reduced_model(const TrafficSpec& spec);

/// Prepends an initialization chain i_1 .. i_t0 (output W): i_k -w-> i_(k+1)
/// and i_k -s-> every target. The initial set becomes {i_1}.
Lts add_init_phase(const Lts& model, std::span<const StateId> targets, int t0);

/// Targets are the post-sample states (q, 1) of every region of `spec`.
Lts add_init_phase(const Lts& model, const TrafficSpec& spec, int t0);

struct RandomSpecOptions {
  int max_regions = 4;
  int max_tau_high = 5;
  int max_successors = 2;
};

/// Random valid spec with clock-1 initial regions; replayable from the seed.
TrafficSpec random_traffic_spec(std::mt19937_64& rng, const RandomSpecOptions& options = {});

}  // namespace asemin
