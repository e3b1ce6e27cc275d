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

#include "asemin/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "asemin/errors.hpp"

namespace asemin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("$", std::string("invalid JSON: ") + e.what());
  }
}

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path, "unknown field '" + key + "'");
  }
}

const json& field(const json& obj, const std::string& path, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(path, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_string()) fail(path + "." + name, "expected a string");
  return v.get<std::string>();
}

int int_field(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_number_integer()) fail(path + "." + name, "expected an integer");
  return v.get<int>();
}

bool bool_field(const json& obj, const std::string& path, const char* name, bool fallback) {
  auto it = obj.find(name);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) fail(path + "." + name, "expected a boolean");
  return it->get<bool>();
}

const json& array_field(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_array()) fail(path + "." + name, "expected an array");
  return v;
}

void check_version(const json& doc) {
  const int version = int_field(doc, "$", "format_version");
  if (version != kFormatVersion)
    fail("$.format_version", "unsupported version " + std::to_string(version));
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

Lts parse_lts(std::string_view text) {
  const json doc = parse_json(text);
  only_fields(doc, "$", {"format_version", "states", "actions", "transitions"});
  check_version(doc);

  LtsData d;
  std::set<std::string> states;
  const json& st = array_field(doc, "$", "states");
  for (std::size_t i = 0; i < st.size(); ++i) {
    const std::string path = at("$.states", i);
    only_fields(st[i], path, {"id", "output", "initial"});
    auto id = string_field(st[i], path, "id");
    if (id.empty()) fail(path + ".id", "empty state id");
    if (!states.insert(id).second) fail(path + ".id", "duplicate state '" + id + "'");
    if (bool_field(st[i], path, "initial", false)) d.initial.push_back(id);
    d.states.push_back({std::move(id), string_field(st[i], path, "output")});
  }

  std::set<std::string> actions;
  const json& ac = array_field(doc, "$", "actions");
  for (std::size_t i = 0; i < ac.size(); ++i) {
    const std::string path = at("$.actions", i);
    if (!ac[i].is_string()) fail(path, "expected a string");
    auto a = ac[i].get<std::string>();
    if (a.empty()) fail(path, "empty action id");
    if (!actions.insert(a).second) fail(path, "duplicate action '" + a + "'");
    d.actions.push_back(std::move(a));
  }

  std::set<LtsData::Edge> edges;
  const json& tr = array_field(doc, "$", "transitions");
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const std::string path = at("$.transitions", i);
    only_fields(tr[i], path, {"from", "action", "to"});
    LtsData::Edge e{string_field(tr[i], path, "from"), string_field(tr[i], path, "action"),
                    string_field(tr[i], path, "to")};
    if (!states.contains(e.from)) fail(path + ".from", "unknown state '" + e.from + "'");
    if (!actions.contains(e.action)) fail(path + ".action", "unknown action '" + e.action + "'");
    if (!states.contains(e.to)) fail(path + ".to", "unknown state '" + e.to + "'");
    if (!edges.insert(e).second)
      fail(path, "duplicate transition (" + e.from + ", " + e.action + ", " + e.to + ")");
    d.transitions.push_back(std::move(e));
  }
  return Lts(d);
}

std::string emit_lts(const Lts& s) {
  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["states"] = ordered_json::array();
  for (auto x : s.states()) {
    ordered_json st;
    st["id"] = s.name(x);
    st["output"] = s.output_name(x);
    st["initial"] = s.is_initial(x);
    doc["states"].push_back(std::move(st));
  }
  doc["actions"] = ordered_json::array();
  for (const auto& a : s.action_names()) doc["actions"].push_back(a);
  doc["transitions"] = ordered_json::array();
  // Ids order like names, so the stored order is already lexicographic.
  for (const auto& t : s.transitions()) {
    ordered_json e;
    e["from"] = s.name(t.source);
    e["action"] = s.name(t.action);
    e["to"] = s.name(t.target);
    doc["transitions"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

TrafficSpec parse_traffic_spec(std::string_view text) {
  const json doc = parse_json(text);
  only_fields(doc, "$", {"format_version", "regions", "delta"});
  check_version(doc);

  TrafficSpec spec;
  const json& rg = array_field(doc, "$", "regions");
  for (std::size_t i = 0; i < rg.size(); ++i) {
    const std::string path = at("$.regions", i);
    only_fields(rg[i], path, {"id", "tau_low", "tau_high", "initial"});
    spec.regions.push_back({string_field(rg[i], path, "id"), int_field(rg[i], path, "tau_low"),
                            int_field(rg[i], path, "tau_high"),
                            bool_field(rg[i], path, "initial", false)});
  }
  const json& dl = array_field(doc, "$", "delta");
  for (std::size_t i = 0; i < dl.size(); ++i) {
    const std::string path = at("$.delta", i);
    only_fields(dl[i], path, {"from", "tau", "to"});
    spec.delta.push_back({string_field(dl[i], path, "from"), int_field(dl[i], path, "tau"),
                          string_field(dl[i], path, "to")});
  }
  if (auto v = validate(spec); !v.empty()) {
    std::string msg = "$: " + v.front();
    throw ParseError(msg, std::move(v));
  }
  return spec;
}

std::string emit_traffic_spec(const TrafficSpec& spec) {
  auto regions = spec.regions;
  std::sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  auto delta = spec.delta;
  std::sort(delta.begin(), delta.end());

  ordered_json doc;
  doc["format_version"] = kFormatVersion;
  doc["regions"] = ordered_json::array();
  for (const auto& r : regions) {
    ordered_json o;
    o["id"] = r.id;
    o["tau_low"] = r.tau_low;
    o["tau_high"] = r.tau_high;
    o["initial"] = r.initial;
    doc["regions"].push_back(std::move(o));
  }
  doc["delta"] = ordered_json::array();
  for (const auto& d : delta) {
    ordered_json o;
    o["from"] = d.from;
    o["tau"] = d.tau;
    o["to"] = d.to;
    doc["delta"].push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Lts& s, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph " << dot_quote(options.graph_name) << " {\n";
  std::size_t stub = 0;
  for (auto x : s.initial()) {
    out << "  __init" << stub << " [shape=none, label=\"\", width=0, height=0];\n";
    out << "  __init" << stub << " -> " << dot_quote(s.name(x)) << ";\n";
    ++stub;
  }
  for (auto x : s.states())
    out << "  " << dot_quote(s.name(x)) << " [label=" << dot_quote(s.name(x) + "\n" + s.output_name(x))
        << "];\n";
  std::map<std::pair<StateId, StateId>, std::vector<std::string>> grouped;
  for (const auto& t : s.transitions()) grouped[{t.source, t.target}].push_back(s.name(t.action));
  for (const auto& [ends, labels] : grouped) {
    std::string label;
    for (std::size_t i = 0; i < labels.size(); ++i) label += (i ? ", " : "") + labels[i];
    out << "  " << dot_quote(s.name(ends.first)) << " -> " << dot_quote(s.name(ends.second))
        << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json trace_to_json(const ReductionTrace& trace) {
  auto size_json = [](const SizeTriple& t, std::size_t tran) {
    ordered_json o;
    o["states"] = t.states;
    o["initial"] = t.initial;
    o["transitions"] = t.transitions;
    o["tran_size"] = tran;
    return o;
  };
  ordered_json doc;
  doc["mas_pairs"] = trace.mas_pairs;
  doc["merged_blocks"] = trace.merged_blocks;
  doc["steps"] = ordered_json::array();
  for (const auto& step : trace.steps) {
    ordered_json o;
    o["name"] = step.name;
    o["before"] = size_json(step.before, step.tran_size_before);
    o["after"] = size_json(step.after, step.tran_size_after);
    o["removed_transitions"] = ordered_json::array();
    for (const auto& e : step.removed_transitions)
      o["removed_transitions"].push_back({{"from", e.from}, {"action", e.action}, {"to", e.to}});
    o["removed_initial"] = step.removed_initial;
    o["removed_states"] = step.removed_states;
    doc["steps"].push_back(std::move(o));
  }
  return doc;
}

ordered_json strategy_to_json(const Composition& game, const GameResult& result) {
  using Row = std::pair<std::vector<std::string>, std::vector<std::string>>;
  auto local_names = [&](StateId x) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < game.models.size(); ++i)
      names.push_back(game.models[i].name(game.components[x.value][i]));
    return names;
  };
  std::vector<Row> rows;
  for (auto x : result.winning) {
    std::vector<std::string> act;
    const auto& joint = game.joint_actions[result.strategy[x.value]->value];
    for (std::size_t i = 0; i < joint.size(); ++i) act.push_back(game.models[i].name(joint[i]));
    rows.emplace_back(local_names(x), std::move(act));
  }
  std::sort(rows.begin(), rows.end());

  ordered_json doc;
  doc["schedulable"] = result.schedulable;
  doc["winning"] = ordered_json::array();
  for (const auto& [state, act] : rows) doc["winning"].push_back(state);
  doc["strategy"] = ordered_json::array();
  for (const auto& [state, act] : rows) {
    ordered_json o;
    o["state"] = state;
    o["action"] = act;
    doc["strategy"].push_back(std::move(o));
  }
  return doc;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace asemin
