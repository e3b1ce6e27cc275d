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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asemin/alt_sim.hpp"
#include "asemin/errors.hpp"
#include "asemin/random.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asemin;

TEST_CASE("maximal relation of the running example") {
  const Lts s = load_fixture("running.lts.json");
  const Relation expected = oracle::reflexive_transitive_closure(
      s, {{"q0_1", "q1_1"}, {"q0_2", "q1_3"}, {"q0_2", "q1_4"}, {"q1_3", "q1_4"},
          {"q1_4", "q1_3"}, {"q1_3", "q1_2"}, {"q1_4", "q1_2"}});
  const Relation mas = max_asr(s, s);
  CHECK(mas == expected);
  CHECK(mas.count() == 14);
  CHECK(oracle::satisfies_steps(s, s, mas));
}

TEST_CASE("partition into equivalence classes") {
  const Lts s = load_fixture("running.lts.json");
  const Partition p = as_equivalence_partition(s, max_asr(s, s));
  CHECK(p.blocks.size() == 5);
  CHECK(p.block_of(s.state("q1_3")) == p.block_of(s.state("q1_4")));
  CHECK(p.block_of(s.state("q1_2")) != p.block_of(s.state("q1_3")));
}

TEST_CASE("identity is always a valid step relation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Lts s = random_lts(rng, {6, 2, 2, 12, 2});
    CHECK_FALSE(check_asr(s, s, Relation::identity(s.num_states())).has_value());
  }
}

TEST_CASE("fixed point agrees with brute force on two-state systems") {
  for (int n = 1; n <= 2; ++n)
    for (unsigned out = 0; out < (1u << n); ++out)
      for (unsigned long e = 0; e < (1ul << (2 * n * n)); ++e) {
        const Lts s = oracle::enumerated_system(n, 2, out, e);
        REQUIRE(max_asr(s, s) == oracle::union_of_valid_relations(s, s));
      }
}

TEST_CASE("fixed point agrees with brute force across different systems") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Lts a = random_lts(rng, {3, 2, 2, 5, 2});
    const Lts b = random_lts(rng, {3, 2, 2, 5, 2});
    REQUIRE(max_asr(a, b) == oracle::union_of_valid_relations(a, b));
    REQUIRE(ase_holds(a, b) == oracle::ase_brute(a, b));
  }
}

TEST_CASE("running example is equivalent to its reduced and minimal forms") {
  const Lts run_full = load_fixture("running.lts.json");
  const Lts run_min = load_fixture("running_min.lts.json");
  const Lts run_red = load_fixture("running_reduced.lts.json");
  CHECK(ase_holds(run_full, run_min));
  CHECK(ase_holds(run_min, run_full));
  CHECK(ase_holds(run_full, run_red));
}

TEST_CASE("violations are reported") {
  const Lts run_min = load_fixture("running_min.lts.json");
  auto d = run_min.data();
  d.initial = {"q0_2"};
  const Lts moved(d);
  const auto c = ase_check(run_min, moved);
  CHECK_FALSE(c.holds());
  REQUIRE(c.forward_violation.has_value());
  CHECK(c.forward_violation->condition == 1);
  CHECK(c.forward_violation->describe(run_min, moved).find("q0_2") != std::string::npos);

  Relation everything(2, 2);
  for (auto x : run_min.states())
    for (auto y : run_min.states()) everything.insert(x, y);
  const auto v = check_asr_steps(run_min, run_min, everything);
  REQUIRE(v.has_value());
  CHECK(v->condition == 2);
}

TEST_CASE("controller moves must be answered") {
  LtsData d;
  d.states = {{"p", "A"}, {"q", "A"}, {"r", "B"}};
  d.initial = {"p"};
  d.actions = {"u"};
  d.transitions = {{"p", "u", "r"}};
  const Lts s(d);
  // q has no move, so q cannot simulate p; p simulates q vacuously.
  const Relation mas = max_asr(s, s);
  CHECK(mas.contains(s.state("q"), s.state("p")));
  CHECK_FALSE(mas.contains(s.state("p"), s.state("q")));
}

TEST_CASE("relation size mismatch") {
  const Lts run_min = load_fixture("running_min.lts.json");
  CHECK_THROWS_AS(check_asr(run_min, run_min, Relation(3, 2)), InputError);
}
