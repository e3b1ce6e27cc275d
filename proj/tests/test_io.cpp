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

#include "asemin/errors.hpp"
#include "asemin/io.hpp"
#include "asemin/random.hpp"
#include "fixtures.hpp"

using namespace asemin;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_lts(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kSmall = R"({"format_version": 1,
  "states": [{"id": "b", "output": "W"}, {"id": "a", "output": "T", "initial": true}],
  "actions": ["w"],
  "transitions": [{"from": "b", "action": "w", "to": "a"}, {"from": "a", "action": "w", "to": "b"}]})";

}  // namespace

TEST_CASE("fixtures parse") {
  CHECK(load_fixture("running.lts.json").size() == SizeTriple{6, 2, 15});
  CHECK(load_fixture("running_min.lts.json").size() == SizeTriple{2, 1, 3});
}

TEST_CASE("fixtures are canonical") {
  for (const char* name : {"running.lts.json", "running_min.lts.json", "running_reduced.lts.json"})
    CHECK(emit_lts(load_fixture(name)) == read_text_file(fixture_path(name)));
  const std::string spec = read_text_file(fixture_path("twospec.json"));
  CHECK(emit_traffic_spec(parse_traffic_spec(spec)) == spec);
}

TEST_CASE("round trip") {
  const Lts s = parse_lts(kSmall);
  const std::string canonical = emit_lts(s);
  CHECK(canonical.find("\"id\": \"a\"") < canonical.find("\"id\": \"b\""));
  CHECK(parse_lts(canonical) == s);
  CHECK(emit_lts(parse_lts(canonical)) == canonical);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Lts r = random_lts(rng, {8, 3, 3, 20, 3});
    CHECK(parse_lts(emit_lts(r)) == r);
  }
}

TEST_CASE("errors carry a json path") {
  std::string doc = kSmall;
  CHECK(parse_error(std::string(doc).replace(doc.rfind("\"b\""), 3, "\"zz\"")) ==
        "$.transitions[1].to: unknown state 'zz'");
  CHECK(parse_error("{") .rfind("$: invalid JSON", 0) == 0);
  CHECK(parse_error(R"({"format_version": 2, "states": [], "actions": [], "transitions": []})") ==
        "$.format_version: unsupported version 2");
  CHECK(parse_error(R"({"format_version": 1, "states": [], "actions": [], "transitions": [], "x": 1})") ==
        "$: unknown field 'x'");
  CHECK(parse_error(R"({"format_version": 1, "states": [{"id": "a"}], "actions": [], "transitions": []})") ==
        "$.states[0]: missing field 'output'");
  CHECK(parse_error(R"({"format_version": 1, "states": [{"id": "a", "output": "T"}], "actions": ["u"],
      "transitions": [{"from": "a", "action": "u", "to": "a"}, {"from": "a", "action": "u", "to": "a"}]})") ==
        "$.transitions[1]: duplicate transition (a, u, a)");
  CHECK(parse_error(R"({"format_version": 1, "states": [{"id": "a", "output": 3}], "actions": [], "transitions": []})") ==
        "$.states[0].output: expected a string");
}

TEST_CASE("traffic spec errors") {
  CHECK_THROWS_AS(parse_traffic_spec(R"({"format_version": 1, "regions": [{"id": "q", "tau_low": 2, "tau_high": 1}], "delta": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_traffic_spec(R"({"format_version": 1, "regions": [], "delta": [], "extra": 0})"),
                  ParseError);
}

TEST_CASE("dot export") {
  const std::string run_min = emit_dot(load_fixture("running_min.lts.json"));
  CHECK(run_min.rfind("digraph \"lts\" {\n", 0) == 0);
  CHECK(run_min.find("\"q0_1\" [label=\"q0_1\nT\"];") != std::string::npos);
  CHECK(run_min.find("__init0 -> \"q0_1\";") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = 0; (at = run_min.find("\" -> \"", at)) != std::string::npos; ++at) ++edges;
  CHECK(edges == 3);

  const std::string run_full = emit_dot(load_fixture("running.lts.json"));
  CHECK(run_full.find("\"q0_2\" -> \"q0_1\" [label=\"s, w\"];") != std::string::npos);

  CHECK(emit_dot(Lts(LtsData{})) == "digraph \"lts\" {\n}\n");
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), InputError);
}
