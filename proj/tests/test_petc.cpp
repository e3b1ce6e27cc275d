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
#include "asemin/io.hpp"
#include "asemin/minimize.hpp"
#include "asemin/petc.hpp"
#include "fixtures.hpp"

using namespace asemin;

namespace {

TrafficSpec two_regions() { return parse_traffic_spec(read_text_file(fixture_path("twospec.json"))); }

}  // namespace

TEST_CASE("full model of the two-region spec") {
  const Lts m = petc_traffic_model(two_regions());
  CHECK(m.size() == SizeTriple{6, 2, 15});
  CHECK(m == load_fixture("running.lts.json"));
  CHECK(m.output_name(m.state("q1_1")) == "T");
  CHECK(m.output_name(m.state("q1_4")) == "W");
}

TEST_CASE("reduced model of the two-region spec") {
  const Lts m = petc_reduced_model(two_regions());
  CHECK(m.size() == SizeTriple{5, 2, 9});
  CHECK(m == load_fixture("running_reduced.lts.json"));
}

TEST_CASE("full and reduced models are equivalent") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto spec = random_traffic_spec(rng);
    REQUIRE(validate(spec).empty());
    const Lts full = petc_traffic_model(spec);
    const Lts reduced = petc_reduced_model(spec);
    CHECK(reduced.size().within(full.size()));
    CHECK(ase_holds(full, reduced));
  }
}

TEST_CASE("init phase") {
  const auto spec = two_regions();
  const Lts m = add_init_phase(petc_traffic_model(spec), spec, 3);
  CHECK(m.size() == SizeTriple{9, 1, 15 + 2 + 3 * 2});
  CHECK(m.is_initial(m.state("i_1")));
  CHECK(m.output_name(m.state("i_3")) == "W");
  CHECK(m.has_transition(m.state("i_3"), m.action("s"), m.state("q1_1")));
  CHECK(m.post(m.state("i_3"), m.action("w")).empty());
  CHECK_THROWS_AS(add_init_phase(m, spec, 0), InputError);
  CHECK_THROWS_AS(add_init_phase(m, spec, 1), InputError);

  const Lts run_min = load_fixture("running_min.lts.json");
  const StateId target[] = {run_min.state("q0_1")};
  CHECK(add_init_phase(run_min, target, 2).size() == SizeTriple{4, 1, 3 + 1 + 2});
}

TEST_CASE("spec validation") {
  auto spec = two_regions();
  spec.regions[0].tau_low = 3;
  spec.delta.push_back({"q9", 1, "q0"});
  spec.delta.push_back({"q0", 1, "q0"});
  const auto v = validate(spec);
  CHECK(v.size() == 3);
  CHECK_THROWS_AS(petc_traffic_model(spec), InputError);

  auto gap = two_regions();
  std::erase_if(gap.delta, [](const auto& d) { return d.from == "q1" && d.tau == 3; });
  REQUIRE(validate(gap).size() == 1);
  CHECK(validate(gap)[0] == "region 'q1' has no successor at tau 3");
}

TEST_CASE("random specs replay from the seed") {
  std::mt19937_64 a(5), b(5);
  const auto s1 = random_traffic_spec(a), s2 = random_traffic_spec(b);
  CHECK(emit_traffic_spec(s1) == emit_traffic_spec(s2));
}
