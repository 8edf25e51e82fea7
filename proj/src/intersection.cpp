// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcmb/intersection.hpp"

#include <deque>
#include <vector>

#include "gcmb/errors.hpp"

namespace gcmb {
namespace {

// Exchange graph for common independent set I (Schrijver's orientation):
// y -> x when I - y + x is independent in M1, x -> y when it is in M2, for
// y in I and x outside. Paths run from `sources` (I + x independent in M1) to
// `sinks` (I + x independent in M2).
struct ExchangeGraph {
  std::vector<std::vector<int>> out;
  ElementSet sources;
  ElementSet sinks;
};

class CountingPair {
 public:
  CountingPair(const Matroid& m1, const Matroid& m2, IntersectionStats* stats)
      : m1_(m1), m2_(m2), stats_(stats) {}

  bool in1(ElementSet x) const {
    if (stats_) ++stats_->oracle_calls;
    return m1_.independent(x);
  }
  bool in2(ElementSet x) const {
    if (stats_) ++stats_->oracle_calls;
    return m2_.independent(x);
  }

  ExchangeGraph build(ElementSet current) const {
    const int n = m1_.size();
    ExchangeGraph g{std::vector<std::vector<int>>(n), {}, {}};
    const ElementSet outside = ElementSet::prefix(n) - current;
    outside.for_each([&](int x) {
      const ElementSet grown = current.with(x);
      if (in1(grown)) g.sources = g.sources.with(x);
      if (in2(grown)) g.sinks = g.sinks.with(x);
    });
    current.for_each([&](int y) {
      const ElementSet base = current.without(y);
      outside.for_each([&](int x) {
        const ElementSet swapped = base.with(x);
        if (g.sources.contains(x) || in1(swapped)) g.out[y].push_back(x);
        if (g.sinks.contains(x) || in2(swapped)) g.out[x].push_back(y);
      });
    });
    return g;
  }

 private:
  const Matroid& m1_;
  const Matroid& m2_;
  IntersectionStats* stats_;
};

void check_same_ground(const Matroid& m1, const Matroid& m2) {
  if (m1.size() != m2.size()) {
    throw UsageError("matroid intersection needs equal ground sets (" +
                     std::to_string(m1.size()) + " vs " + std::to_string(m2.size()) + ")");
  }
}

ElementSet apply_path(ElementSet current, const std::vector<int>& pred, int end) {
  for (int v = end; v >= 0; v = pred[v]) {
    current = current.contains(v) ? current.without(v) : current.with(v);
  }
  return current;
}

}  // namespace

ElementSet max_common_independent(const Matroid& m1, const Matroid& m2, IntersectionStats* stats) {
  check_same_ground(m1, m2);
  const int n = m1.size();
  const CountingPair pair(m1, m2, stats);
  ElementSet current;
  while (true) {
    const ExchangeGraph g = pair.build(current);
    std::vector<int> pred(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue;
    g.sources.for_each([&](int s) {
      seen[s] = 1;
      queue.push_back(s);
    });
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int v = queue.front();
      queue.pop_front();
      if (g.sinks.contains(v)) {
        end = v;
        break;
      }
      for (int u : g.out[v]) {
        if (seen[u]) continue;
        seen[u] = 1;
        pred[u] = v;
        queue.push_back(u);
      }
    }
    if (end < 0) return current;
    current = apply_path(current, pred, end);
    if (stats) ++stats->augmentations;
  }
}

std::optional<WeightedBase> min_weight_common_base(const Matroid& m1, const Matroid& m2,
                                                   std::span<const Weight> w,
                                                   IntersectionStats* stats) {
  check_same_ground(m1, m2);
  const int n = m1.size();
  if (static_cast<int>(w.size()) != n) throw UsageError("weight vector length mismatch");
  if (m1.rank() != m2.rank()) return std::nullopt;
  const CountingPair pair(m1, m2, stats);

  struct Label {
    Weight length;
    int arcs = 0;
    bool reached = false;
  };
  auto better = [](const Weight& len, int arcs, const Label& old) {
    return !old.reached || len < old.length || (len == old.length && arcs < old.arcs);
  };

  ElementSet current;
  while (current.size() < m1.rank()) {
    const ExchangeGraph g = pair.build(current);
    auto vertex_length = [&](int v) { return current.contains(v) ? -w[v] : w[v]; };
    std::vector<Label> label(n);
    std::vector<int> pred(n, -1);
    g.sources.for_each([&](int s) { label[s] = Label{vertex_length(s), 0, true}; });
    // Bellman-Ford; the exchange graph has no negative cycles for an extreme I.
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int v = 0; v < n; ++v) {
        if (!label[v].reached) continue;
        for (int u : g.out[v]) {
          const Weight len = label[v].length + vertex_length(u);
          const int arcs = label[v].arcs + 1;
          if (better(len, arcs, label[u])) {
            label[u] = Label{len, arcs, true};
            pred[u] = v;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    int end = -1;
    g.sinks.for_each([&](int t) {
      if (!label[t].reached) return;
      if (end < 0 || better(label[t].length, label[t].arcs, label[end])) end = t;
    });
    if (end < 0) return std::nullopt;
    current = apply_path(current, pred, end);
    if (stats) ++stats->augmentations;
  }
  Weight total = 0;
  current.for_each([&](int e) { total += w[e]; });
  return WeightedBase{current, total};
}

}  // namespace gcmb
