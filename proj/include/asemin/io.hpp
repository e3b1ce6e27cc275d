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

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "asemin/game.hpp"
#include "asemin/lts.hpp"
#include "asemin/minimize.hpp"
#include "asemin/petc.hpp"

namespace asemin {

inline constexpr int kFormatVersion = 1;

/// Decodes an LTS document:
///   {"format_version": 1,
///    "states": [{"id": "...", "output": "...", "initial": true}],
///    "actions": ["..."],
///    "transitions": [{"from": "...", "action": "...", "to": "..."}]}
/// Unknown fields, dangling references and duplicates raise ParseError whose
/// message starts with the JSON path of the offending element.
Lts parse_lts(std::string_view text);

/// Canonical form: all arrays sorted, two-space indentation, trailing newline.
std::string emit_lts(const Lts& s);

/// {"format_version": 1,
///  "regions": [{"id": "...", "tau_low": 2, "tau_high": 4, "initial": true}],
///  "delta": [{"from": "...", "tau": 1, "to": "..."}]}
TrafficSpec parse_traffic_spec(std::string_view text);
std::string emit_traffic_spec(const TrafficSpec& spec);

struct DotOptions {
  std::string graph_name = "lts";
};

/// Graphviz digraph. Nodes are labelled "name\noutput", parallel edges are
/// merged into one edge with comma-joined action labels, and each initial
/// state gets an incoming edge from an invisible stub node.
std::string emit_dot(const Lts& s, const DotOptions& options = {});

nlohmann::ordered_json trace_to_json(const ReductionTrace& trace);

/// {"winning": [[...component states...], ...],
///  "strategy": [{"state": [...], "action": [...]}, ...]}
/// sorted by component-state vector (by name).
nlohmann::ordered_json strategy_to_json(const Composition& game, const GameResult& result);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace asemin
