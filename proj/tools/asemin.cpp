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

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asemin/alt_sim.hpp"
#include "asemin/errors.hpp"
#include "asemin/game.hpp"
#include "asemin/io.hpp"
#include "asemin/minimize.hpp"
#include "asemin/petc.hpp"

using namespace asemin;

namespace {

constexpr int kNo = 2;

Lts load(const std::string& path) {
  try {
    return parse_lts(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.violations());
  }
}

void save(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

std::string triple(const SizeTriple& t, std::size_t tran) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%zu, %zu, %zu)  tran_size %zu", t.states, t.initial, t.transitions, tran);
  return buf;
}

void print_pairs(const char* title, const Lts& a, const Lts& b, const Relation& r) {
  std::cout << title << " (" << r.count() << " pairs)\n";
  for (auto [x, y] : r.pairs()) std::cout << "  " << a.name(x) << " -> " << b.name(y) << "\n";
}

int run_minimize(const std::string& in, const std::string& out, const std::string& trace,
                 const std::string& dot) {
  const Lts s = load(in);
  const auto m = minimize(s);
  const auto& steps = m.trace.steps;
  std::printf("%-10s%s\n", "original", triple(s.size(), tran_size(s)).c_str());
  if (!steps.empty())
    std::printf("%-10s%s\n", "quotient", triple(steps.front().after, steps.front().tran_size_after).c_str());
  std::printf("%-10s%s\n", "minimal", triple(m.system.size(), tran_size(m.system)).c_str());
  if (!out.empty()) save(out, emit_lts(m.system));
  if (!trace.empty()) save(trace, trace_to_json(m.trace).dump(2) + "\n");
  if (!dot.empty()) save(dot, emit_dot(m.system));
  return 0;
}

int run_check_ase(const std::string& pa, const std::string& pb) {
  const Lts a = load(pa);
  const Lts b = load(pb);
  const auto c = ase_check(a, b);
  if (c.holds()) {
    std::cout << "equivalent\n";
    print_pairs("forward", a, b, c.forward);
    print_pairs("backward", b, a, c.backward);
    return 0;
  }
  std::cout << "not equivalent\n";
  if (c.forward_violation) std::cout << "forward: " << c.forward_violation->describe(a, b) << "\n";
  if (c.backward_violation) std::cout << "backward: " << c.backward_violation->describe(b, a) << "\n";
  return kNo;
}

int run_gen_petc(const std::string& in, bool reduced, int t0, const std::string& out) {
  const TrafficSpec spec = parse_traffic_spec(read_text_file(in));
  Lts model = reduced ? petc_reduced_model(spec) : petc_traffic_model(spec);
  if (t0 > 0) model = add_init_phase(model, spec, t0);
  save(out, emit_lts(model));
  return 0;
}

int run_compose(const std::vector<std::string>& in, const std::string& out) {
  std::vector<Lts> models;
  for (const auto& p : in) models.push_back(load(p));
  save(out, emit_lts(compose(models).product));
  return 0;
}

int run_schedule(const std::vector<std::string>& in, std::size_t channels, bool pre_minimize,
                 const std::string& strategy) {
  std::vector<Lts> models;
  for (const auto& p : in) models.push_back(load(p));
  const std::clock_t start = std::clock();
  if (pre_minimize)
    for (auto& m : models) m = minimize(m).system;
  const auto game = compose(models);
  const auto result = solve_safety(game.product, collision_predicate(channels));
  const double cpu = double(std::clock() - start) / CLOCKS_PER_SEC;

  const auto size = game.product.size();
  std::cout << (result.schedulable ? "schedulable" : "unschedulable") << "\n";
  std::printf("game      %s\n", triple(size, tran_size(game.product)).c_str());
  std::printf("winning   %zu\n", result.winning.size());
  std::printf("cpu       %.3f s\n", cpu);
  if (!strategy.empty()) save(strategy, strategy_to_json(game, result).dump(2) + "\n");
  return result.schedulable ? 0 : kNo;
}

int run_check_min(const std::string& in) {
  const auto r = check_n_conditions(load(in));
  auto line = [](const char* n, bool ok) { std::cout << n << "  " << (ok ? "holds" : "fails") << "\n"; };
  line("N1", r.n1);
  line("N2", r.n2);
  line("N3", r.n3);
  line("N4", r.n4);
  for (const auto& w : r.witnesses) std::cout << "  " << w << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimization of transition systems modulo alternating simulation equivalence"};
  app.require_subcommand(1);

  std::string in, in2, out, trace, dot, strategy;
  std::vector<std::string> inputs;
  bool reduced = false, pre_minimize = false;
  int t0 = 0;
  std::size_t channels = 1;

  auto* cmd_min = app.add_subcommand("minimize", "reduce a system to its minimal AS-equivalent form");
  cmd_min->add_option("input", in, "system document")->required();
  cmd_min->add_option("-o,--output", out, "write the minimal system");
  cmd_min->add_option("--trace", trace, "write the per-step reduction trace");
  cmd_min->add_option("--dot", dot, "write the minimal system as Graphviz");

  auto* cmd_ase = app.add_subcommand("check-ase", "decide alternating simulation equivalence");
  cmd_ase->add_option("a", in, "first system")->required();
  cmd_ase->add_option("b", in2, "second system")->required();

  auto* cmd_petc = app.add_subcommand("gen-petc", "build a PETC traffic model from a spec");
  cmd_petc->add_option("spec", in, "traffic spec document")->required();
  cmd_petc->add_flag("--reduced", reduced, "clocks capped at tau_low, no triggers");
  cmd_petc->add_option("--init-phase", t0, "prepend an initialization chain of this length")
      ->check(CLI::PositiveNumber);
  cmd_petc->add_option("-o,--output", out, "output document (default stdout)");

  auto* cmd_comp = app.add_subcommand("compose", "reachable synchronous product");
  cmd_comp->add_option("models", inputs, "component systems")->required();
  cmd_comp->add_option("-o,--output", out, "output document (default stdout)");

  auto* cmd_sched = app.add_subcommand("schedule", "solve the scheduling safety game");
  cmd_sched->add_option("models", inputs, "component systems")->required();
  cmd_sched->add_option("--channels", channels, "shared channels")->check(CLI::PositiveNumber);
  cmd_sched->add_flag("--minimize", pre_minimize, "minimize every component first");
  cmd_sched->add_option("--strategy", strategy, "write winning region and strategy");

  auto* cmd_nmin = app.add_subcommand("check-min", "report the necessary minimality conditions");
  cmd_nmin->add_option("input", in, "system document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*cmd_min) return run_minimize(in, out, trace, dot);
    if (*cmd_ase) return run_check_ase(in, in2);
    if (*cmd_petc) return run_gen_petc(in, reduced, t0, out);
    if (*cmd_comp) return run_compose(inputs, out);
    if (*cmd_sched) return run_schedule(inputs, channels, pre_minimize, strategy);
    if (*cmd_nmin) return run_check_min(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (auto* ie = dynamic_cast<const InputError*>(&e))
      for (const auto& v : ie->violations()) std::cerr << "  " << v << "\n";
    return 1;
  }
  return 1;
}
