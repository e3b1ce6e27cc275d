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

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "asemin/minimize.hpp"

namespace asemin {

namespace {

using Signature = std::tuple<bool, std::string, std::vector<std::size_t>, std::size_t>;

Signature signature(const Lts& s, StateId x, const std::vector<std::size_t>& in_degree) {
  std::vector<std::size_t> fanout;
  for (auto u : s.enabled(x)) fanout.push_back(s.post(x, u).size());
  std::sort(fanout.begin(), fanout.end());
  return {s.is_initial(x), s.output_name(x), std::move(fanout), in_degree[x.value]};
}

std::vector<std::size_t> in_degrees(const Lts& s) {
  std::vector<std::size_t> deg(s.num_states(), 0);
  for (const auto& t : s.transitions()) ++deg[t.target.value];
  return deg;
}

// Successor sets of b at q, and of a at p translated through `image`.
// Equal multisets are exactly the existence of the per-state action bijection.
std::vector<std::vector<std::uint32_t>> right_posts(const Lts& b, StateId q) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto u : b.enabled(q)) {
    auto& set = out.emplace_back();
    for (auto y : b.post(q, u)) set.push_back(y.value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> mapped_posts(const Lts& a, StateId p,
                                                     const std::vector<std::int64_t>& image) {
  std::vector<std::vector<std::uint32_t>> out;
  for (auto u : a.enabled(p)) {
    auto& set = out.emplace_back();
    for (auto y : a.post(p, u)) set.push_back(static_cast<std::uint32_t>(image[y.value]));
    std::sort(set.begin(), set.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

class BabiSearch {
 public:
  BabiSearch(const Lts& a, const Lts& b) : a_(a), b_(b) {
    const auto in_a = in_degrees(a);
    const auto in_b = in_degrees(b);
    for (auto x : a.states()) sig_a_.push_back(signature(a, x, in_a));
    for (auto x : b.states()) sig_b_.push_back(signature(b, x, in_b));

    preds_a_.resize(a.num_states());
    for (const auto& t : a.transitions()) preds_a_[t.target.value].push_back(t.source);

    // Breadth-first from the initial states so that most states have an
    // already-placed predecessor restricting their candidates.
    std::vector<char> seen(a.num_states(), 0);
    std::deque<StateId> work;
    auto visit = [&](StateId x) {
      if (!seen[x.value]) {
        seen[x.value] = 1;
        work.push_back(x);
      }
    };
    for (auto x : a.initial()) visit(x);
    for (auto x : a.states()) {
      visit(x);
      while (!work.empty()) {
        auto y = work.front();
        work.pop_front();
        order_.push_back(y);
        for (auto u : a.enabled(y))
          for (auto z : a.post(y, u)) visit(z);
      }
    }
    image_.assign(a.num_states(), -1);
    used_.assign(b.num_states(), 0);
  }

  bool run() { return place(0); }
  const std::vector<std::int64_t>& image() const { return image_; }

 private:
  bool complete(StateId p) const {
    for (auto u : a_.enabled(p))
      for (auto y : a_.post(p, u))
        if (image_[y.value] < 0) return false;
    return true;
  }

  bool consistent(StateId p) const {
    if (!complete(p)) return true;
    return mapped_posts(a_, p, image_) == right_posts(b_, StateId{static_cast<std::uint32_t>(image_[p.value])});
  }

  std::vector<StateId> candidates(StateId p) const {
    for (auto r : preds_a_[p.value]) {
      if (image_[r.value] < 0) continue;
      const StateId q{static_cast<std::uint32_t>(image_[r.value])};
      std::vector<StateId> out;
      for (auto u : b_.enabled(q))
        for (auto y : b_.post(q, u)) out.push_back(y);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    std::vector<StateId> all(b_.states().begin(), b_.states().end());
    return all;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const StateId p = order_[depth];
    for (auto q : candidates(p)) {
      if (used_[q.value] || sig_a_[p.value] != sig_b_[q.value]) continue;
      image_[p.value] = q.value;
      used_[q.value] = 1;
      bool ok = consistent(p);
      for (auto r : preds_a_[p.value])
        if (ok && image_[r.value] >= 0) ok = consistent(r);
      if (ok && place(depth + 1)) return true;
      image_[p.value] = -1;
      used_[q.value] = 0;
    }
    return false;
  }

  const Lts& a_;
  const Lts& b_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<std::vector<StateId>> preds_a_;
  std::vector<StateId> order_;
  std::vector<std::int64_t> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Babi> find_babi(const Lts& a, const Lts& b) {
  if (!(a.size() == b.size())) return std::nullopt;
  BabiSearch search(a, b);
  if (!search.run()) return std::nullopt;
  const auto& image = search.image();

  Babi w;
  for (auto p : a.states()) {
    const StateId q{static_cast<std::uint32_t>(image[p.value])};
    Babi::StatePair pair{p, q, {}};
    std::vector<char> taken(b.num_actions(), 0);
    for (auto ua : a.enabled(p)) {
      std::vector<std::uint32_t> target;
      for (auto y : a.post(p, ua)) target.push_back(static_cast<std::uint32_t>(image[y.value]));
      std::sort(target.begin(), target.end());
      for (auto ub : b.enabled(q)) {
        if (taken[ub.value]) continue;
        auto succ = b.post(q, ub);
        std::vector<std::uint32_t> got;
        for (auto y : succ) got.push_back(y.value);
        if (got == target) {
          taken[ub.value] = 1;
          pair.actions.emplace_back(ua, ub);
          break;
        }
      }
    }
    w.states.push_back(std::move(pair));
  }
  return w;
}

bool is_babi(const Lts& a, const Lts& b, const Babi& w) {
  if (a.num_states() != b.num_states() || w.states.size() != a.num_states()) return false;
  std::vector<std::int64_t> image(a.num_states(), -1);
  std::vector<char> hit(b.num_states(), 0);
  for (const auto& sp : w.states) {
    if (sp.left.value >= a.num_states() || sp.right.value >= b.num_states()) return false;
    if (image[sp.left.value] >= 0 || hit[sp.right.value]) return false;
    image[sp.left.value] = sp.right.value;
    hit[sp.right.value] = 1;
  }
  for (const auto& sp : w.states) {
    const StateId p = sp.left;
    const StateId q = sp.right;
    if (a.is_initial(p) != b.is_initial(q)) return false;
    if (a.output_name(p) != b.output_name(q)) return false;
    const auto ua_all = a.enabled(p);
    const auto ub_all = b.enabled(q);
    if (sp.actions.size() != ua_all.size() || ua_all.size() != ub_all.size()) return false;
    std::set<ActionId> dom, cod;
    for (auto [ua, ub] : sp.actions) {
      if (!std::binary_search(ua_all.begin(), ua_all.end(), ua)) return false;
      if (!std::binary_search(ub_all.begin(), ub_all.end(), ub)) return false;
      if (!dom.insert(ua).second || !cod.insert(ub).second) return false;
      std::vector<std::uint32_t> mapped;
      for (auto y : a.post(p, ua)) mapped.push_back(static_cast<std::uint32_t>(image[y.value]));
      std::sort(mapped.begin(), mapped.end());
      std::vector<std::uint32_t> got;
      for (auto y : b.post(q, ub)) got.push_back(y.value);
      if (mapped != got) return false;
    }
  }
  return true;
}

}  // namespace asemin
