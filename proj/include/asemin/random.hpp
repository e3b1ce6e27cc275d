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

#include "asemin/lts.hpp"

namespace asemin {

struct RandomLtsOptions {
  int states = 5;
  int actions = 2;
  int outputs = 2;
  /// Number of distinct transitions to draw; clipped to states^2 * actions.
  int transitions = 10;
  int max_initial = 2;
};

/// Random system with states "x0", "x1", ..., actions "a", "b", ... and
/// outputs "y0", "y1", ...
/// Deterministic for a given generator state.
Lts random_lts(std::mt19937_64& rng, const RandomLtsOptions& options);

}  // namespace asemin
