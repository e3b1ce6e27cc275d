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

#include "asemin/random.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

namespace asemin {

Lts random_lts(std::mt19937_64& rng, const RandomLtsOptions& options) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = std::max(options.states, 1);
  const int na = std::max(options.actions, 1);
  const int ny = std::max(options.outputs, 1);

  LtsData d;
  for (int a = 0; a < na; ++a) d.actions.push_back(std::string(1, static_cast<char>('a' + a)));
  for (int x = 0; x < n; ++x)
    d.states.push_back({"x" + std::to_string(x), "y" + std::to_string(uniform(0, ny - 1))});

  std::set<int> initial;
  const int k = uniform(1, std::max(1, std::min(options.max_initial, n)));
  while (static_cast<int>(initial.size()) < k) initial.insert(uniform(0, n - 1));
  for (int x : initial) d.initial.push_back("x" + std::to_string(x));

  const long universe = static_cast<long>(n) * n * na;
  const long wanted = std::min<long>(std::max(options.transitions, 0), universe);
  std::set<std::tuple<int, int, int>> edges;
  while (static_cast<long>(edges.size()) < wanted)
    edges.emplace(uniform(0, n - 1), uniform(0, na - 1), uniform(0, n - 1));
  for (auto [x, a, y] : edges)
    d.transitions.push_back({"x" + std::to_string(x), d.actions[a], "x" + std::to_string(y)});
  return Lts(d);
}

}  // namespace asemin
