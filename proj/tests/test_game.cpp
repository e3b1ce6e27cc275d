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

#include <functional>
#include <random>

#include "asemin/errors.hpp"
#include "asemin/game.hpp"
#include "asemin/minimize.hpp"
#include "asemin/petc.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asemin;

namespace {

Lts staggered_component() {
  const Lts run_min = load_fixture("running_min.lts.json");
  const StateId target[] = {run_min.state("q0_1")};
  return add_init_phase(run_min, target, 2);
}

Lts with_output(const std::string& y) {
  LtsData d;
  d.states = {{"x", y}};
  d.initial = {"x"};
  d.actions = {"s"};
  d.transitions = {{"x", "s", "x"}};
  return Lts(d);
}

void check_sound_and_maximal(const Lts& g, const StatePredicate& bad, const GameResult& r) {
  for (auto x : g.states()) {
    if (r.wins(x)) {
      REQUIRE(r.strategy[x.value].has_value());
      CHECK_FALSE(bad(g, x));
      for (auto y : g.post(x, *r.strategy[x.value])) CHECK(r.wins(y));
    } else {
      for (auto u : g.enabled(x)) {
        bool escapes = bad(g, x);
        for (auto y : g.post(x, u)) escapes = escapes || !r.wins(y);
        CHECK(escapes);
      }
    }
  }
}

}  // namespace

TEST_CASE("product of two minimal running examples") {
  const Lts run_min = load_fixture("running_min.lts.json");
  const std::vector<Lts> models{run_min, run_min};
  const auto c = compose(models);
  CHECK(c.product.num_states() <= 4);
  const StateId a = c.product.state("(q0_1,q0_1)");
  CHECK(c.product.is_initial(a));
  CHECK(c.product.output_name(a) == "T,T");
  const auto ww = c.product.post(a, c.product.action("w,w"));
  REQUIRE(ww.size() == 1);
  CHECK(c.product.name(ww[0]) == "(q0_2,q0_2)");
  const auto ss = c.product.post(a, c.product.action("s,s"));
  REQUIRE(ss.size() == 1);
  CHECK(ss[0] == a);

  const StateId local[] = {run_min.state("q0_2"), run_min.state("q0_2")};
  CHECK(c.find(local) == c.product.state("(q0_2,q0_2)"));
}

TEST_CASE("unary product vectorizes outputs") {
  const Lts run_full = load_fixture("running.lts.json");
  const std::vector<Lts> one{run_full};
  const auto c = compose(one);
  CHECK(c.product.size() == run_full.size());
  CHECK(c.product.output_name(c.product.state("(q1_1)")) == "T");
}

TEST_CASE("composition rejects bad input") {
  CHECK_THROWS_AS(compose(std::vector<Lts>{}), InputError);
  LtsData d;
  d.states = {{"x", "T"}};
  d.actions = {"jump"};
  CHECK_THROWS_AS(compose(std::vector<Lts>{Lts(d)}), InputError);
}

TEST_CASE("nondeterminism of each component is independent") {
  const Lts run_full = load_fixture("running.lts.json");
  const auto c = compose(std::vector<Lts>{run_full, run_full});
  const StateId x = c.product.state("(q0_2,q0_2)");
  CHECK(c.product.post(x, c.product.action("s,s")).size() == 4);
}

TEST_CASE("collision predicate") {
  const auto bad1 = collision_predicate(1);
  const auto bad2 = collision_predicate(2);
  const Lts tt = compose(std::vector<Lts>{with_output("T"), with_output("T")}).product;
  const Lts tww = compose(std::vector<Lts>{with_output("T"), with_output("W"), with_output("W")}).product;
  const Lts ttt = compose(std::vector<Lts>{with_output("T"), with_output("T"), with_output("T")}).product;
  CHECK(bad1(tt, StateId{0}));
  CHECK_FALSE(bad1(tww, StateId{0}));
  CHECK(bad2(ttt, StateId{0}));
  CHECK_FALSE(bad2(tt, StateId{0}));
  CHECK_THROWS_AS(collision_predicate(0), InputError);
}

TEST_CASE("two loops collide without an init phase") {
  const Lts run_min = load_fixture("running_min.lts.json");
  const auto c = compose(std::vector<Lts>{run_min, run_min});
  const auto r = solve_safety(c.product, collision_predicate(1));
  CHECK_FALSE(r.schedulable);
  CHECK_THROWS_AS(Scheduler(c, r), ContractViolation);
}

TEST_CASE("staggered schedule after an init phase") {
  const Lts m = staggered_component();
  auto c = compose(std::vector<Lts>{m, m});
  const auto bad = collision_predicate(1);
  const auto r = solve_safety(c.product, bad);
  REQUIRE(r.schedulable);
  check_sound_and_maximal(c.product, bad, r);
  CHECK(oracle::winning_by_game_tree(c.product, bad) == r.winning_mask);

  const Scheduler sched(c, r);
  std::vector<StateId> local{m.state("i_1"), m.state("i_1")};
  const auto first = sched.decide(local);
  CHECK(m.name(first[0]) == "s");
  CHECK(m.name(first[1]) == "w");

  // Every environment resolution for six steps stays collision free.
  std::function<void(std::vector<StateId>, int)> walk = [&](std::vector<StateId> at, int depth) {
    const auto x = *c.find(at);
    CHECK_FALSE(bad(c.product, x));
    if (depth == 0) return;
    const auto act = sched.decide(at);
    for (auto a : m.post(at[0], act[0]))
      for (auto b : m.post(at[1], act[1])) {
        std::vector<StateId> next{a, b};
        CHECK(r.wins(sched.advance(at, next)));
        walk(next, depth - 1);
      }
  };
  walk(local, 6);

  // A 20 step replay.
  for (int step = 0; step < 20; ++step) {
    const auto act = sched.decide(local);
    local = {m.post(local[0], act[0])[0], m.post(local[1], act[1])[0]};
    CHECK_FALSE(bad(c.product, *c.find(local)));
  }

  std::vector<StateId> both_t{m.state("q0_1"), m.state("q0_1")};
  CHECK_THROWS_AS(sched.decide(both_t), ContractViolation);
  const std::vector<StateId> start{m.state("i_1"), m.state("i_1")};
  const std::vector<StateId> wrong{m.state("i_2"), m.state("i_2")};
  CHECK_THROWS_AS(sched.advance(start, wrong), ContractViolation);
}

TEST_CASE("trivial games") {
  const Lts loop = with_output("W");
  const auto never = [](const Lts&, StateId) { return false; };
  CHECK(solve_safety(loop, never).schedulable);

  LtsData d;
  d.states = {{"x", "W"}, {"dead", "W"}};
  d.initial = {"x"};
  d.actions = {"s"};
  d.transitions = {{"x", "s", "dead"}};
  const auto r = solve_safety(Lts(d), never);
  CHECK_FALSE(r.schedulable);
  CHECK(r.winning.empty());
}

TEST_CASE("solver matches the game-tree oracle") {
  std::mt19937_64 rng(31);
  const RandomSpecOptions small{2, 3, 2};
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto s1 = random_traffic_spec(rng, small);
    const auto s2 = random_traffic_spec(rng, small);
    const auto c = compose(std::vector<Lts>{add_init_phase(petc_traffic_model(s1), s1, 2),
                                            add_init_phase(petc_traffic_model(s2), s2, 2)});
    if (c.product.num_states() > 64) continue;
    for (std::size_t ch : {1u, 2u}) {
      const auto bad = collision_predicate(ch);
      const auto r = solve_safety(c.product, bad);
      REQUIRE(oracle::winning_by_game_tree(c.product, bad) == r.winning_mask);
      check_sound_and_maximal(c.product, bad, r);
    }
    ++checked;
  }
  CHECK(checked >= 50);
}

TEST_CASE("more channels never hurt") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    std::vector<Lts> models;
    for (int k = 0; k < 3; ++k) {
      const auto s = random_traffic_spec(rng, {2, 4, 2});
      models.push_back(add_init_phase(petc_reduced_model(s), s, 2));
    }
    const auto c = compose(models);
    bool prev = false;
    for (std::size_t ch = 1; ch <= 3; ++ch) {
      const bool now = solve_safety(c.product, collision_predicate(ch)).schedulable;
      CHECK((!prev || now));
      prev = now;
    }
    CHECK(prev);
  }
}

TEST_CASE("minimizing components preserves schedulability") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 30; ++i) {
    std::vector<Lts> full, small;
    for (int k = 0; k < 3; ++k) {
      const auto s = random_traffic_spec(rng, {3, 4, 2});
      full.push_back(add_init_phase(petc_traffic_model(s), s, 3));
      small.push_back(minimize(full.back()).system);
    }
    const auto bad = collision_predicate(1);
    CHECK(solve_safety(compose(full).product, bad).schedulable ==
          solve_safety(compose(small).product, bad).schedulable);
  }
}
