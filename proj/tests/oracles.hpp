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

#pragma once

// Brute-force reference computations for the unit and acceptance tests. They
// only use independence queries and group addition, never the algorithms
// under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gcmb/catalog.hpp"
#include "gcmb/group.hpp"
#include "gcmb/matroid.hpp"
#include "gcmb/random.hpp"
#include "gcmb/solver.hpp"
#include "gcmb/weight.hpp"

namespace oracle {

using gcmb::ElementSet;

// Maximum-size independent subsets, found by scanning every subset.
inline std::vector<ElementSet> bases(const gcmb::Matroid& m) {
  const int n = m.size();
  std::vector<ElementSet> best;
  int best_size = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const ElementSet x(s);
    if (x.size() < best_size || !m.independent(x)) continue;
    if (x.size() > best_size) {
      best.clear();
      best_size = x.size();
    }
    best.push_back(x);
  }
  std::sort(best.begin(), best.end(), gcmb::LexLess{});
  return best;
}

inline int rank(const gcmb::Matroid& m, ElementSet x) {
  int best = 0;
  gcmb::for_each_subset(x, [&](ElementSet s) {
    if (s.size() > best && m.independent(s)) best = s.size();
    return true;
  });
  return best;
}

inline int label_sum(const gcmb::GroupSpec& g, const std::vector<int>& codes, ElementSet s) {
  int sum = 0;
  s.for_each([&](int e) { sum = g.add_codes(sum, codes[e]); });
  return sum;
}

inline gcmb::Weight weight(const gcmb::WeightVector& w, ElementSet s) {
  gcmb::Weight total = 0;
  s.for_each([&](int e) { total += w[e]; });
  return total;
}

inline int distance(ElementSet a, ElementSet b) { return (a - b).size(); }

struct Best {
  bool feasible = false;
  gcmb::Weight weight = 0;
};

// Minimum weight (or mere existence) of a base with label sum `target`.
inline Best min_g_base(const std::vector<ElementSet>& all_bases, const gcmb::GroupSpec& g,
                       const std::vector<int>& codes, int target, const gcmb::WeightVector* w) {
  Best out;
  for (ElementSet b : all_bases) {
    if (label_sum(g, codes, b) != target) continue;
    const gcmb::Weight x = w ? weight(*w, b) : gcmb::Weight(0);
    if (!out.feasible || x < out.weight) out = {true, x};
  }
  return out;
}

// Largest distance from a (weight-optimal) base to the nearest (weight-optimal)
// g-base, over all attainable g. With `w`, both quantifiers range over optimum
// bases of M and optimum g-bases respectively.
inline int required_k(const std::vector<ElementSet>& all_bases, const gcmb::GroupSpec& g,
                      const std::vector<int>& codes, const gcmb::WeightVector* w) {
  std::vector<ElementSet> sources = all_bases;
  if (w) {
    gcmb::Weight best = weight(*w, all_bases[0]);
    for (ElementSet b : all_bases) best = std::min(best, weight(*w, b));
    std::erase_if(sources, [&](ElementSet b) { return weight(*w, b) != best; });
  }
  int worst = 0;
  for (int target = 0; target < g.order(); ++target) {
    std::vector<ElementSet> targets;
    for (ElementSet b : all_bases) {
      if (label_sum(g, codes, b) == target) targets.push_back(b);
    }
    if (targets.empty()) continue;
    if (w) {
      gcmb::Weight best = weight(*w, targets[0]);
      for (ElementSet b : targets) best = std::min(best, weight(*w, b));
      std::erase_if(targets, [&](ElementSet b) { return weight(*w, b) != best; });
    }
    for (ElementSet a : sources) {
      int nearest = std::numeric_limits<int>::max();
      for (ElementSet d : targets) nearest = std::min(nearest, distance(a, d));
      worst = std::max(worst, nearest);
    }
  }
  return worst;
}

inline int max_common_independent(const gcmb::Matroid& a, const gcmb::Matroid& b) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.size()); ++s) {
    const ElementSet x(s);
    if (x.size() > best && a.independent(x) && b.independent(x)) best = x.size();
  }
  return best;
}

inline std::optional<gcmb::Weight> min_common_base(const gcmb::Matroid& a, const gcmb::Matroid& b,
                                                   const gcmb::WeightVector& w) {
  if (a.rank() != b.rank()) return std::nullopt;
  std::optional<gcmb::Weight> best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << a.size()); ++s) {
    const ElementSet x(s);
    if (x.size() != a.rank() || !a.independent(x) || !b.independent(x)) continue;
    const gcmb::Weight v = weight(w, x);
    if (!best || v < *best) best = v;
  }
  return best;
}

// Davenport constant: one more than the longest zero-sum-free sequence,
// found by extending nondecreasing code sequences and tracking subset sums.
inline int davenport(const gcmb::GroupSpec& g) {
  int longest = 0;
  std::vector<int> seq;
  auto rec = [&](auto&& self, std::vector<bool>& sums, int min_code) -> void {
    longest = std::max(longest, static_cast<int>(seq.size()));
    for (int c = std::max(1, min_code); c < g.order(); ++c) {
      // New subset sums: old sums + c, plus c alone.
      std::vector<bool> next = sums;
      bool zero = (c == 0);
      for (int s = 0; s < g.order(); ++s) {
        if (sums[s]) {
          const int t = g.add_codes(s, c);
          if (t == 0) zero = true;
          next[t] = true;
        }
      }
      next[c] = true;
      if (zero) continue;
      seq.push_back(c);
      self(self, next, c);
      seq.pop_back();
    }
  };
  std::vector<bool> sums(g.order(), false);
  rec(rec, sums, 1);
  return longest + 1;
}

inline bool strong_block_isolating(const std::vector<ElementSet>& all_bases, int n,
                                   const gcmb::GroupSpec& g, const std::vector<int>& codes,
                                   bool among_blocks_only) {
  const ElementSet ground = ElementSet::prefix(n);
  auto is_base = [&](ElementSet x) {
    return std::binary_search(all_bases.begin(), all_bases.end(), x, gcmb::LexLess{});
  };
  for (ElementSet b : all_bases) {
    if (!is_base(ground - b)) continue;
    const int label = label_sum(g, codes, b);
    int same = 0;
    for (ElementSet c : all_bases) {
      if (among_blocks_only && !is_base(ground - c)) continue;
      if (label_sum(g, codes, c) == label) ++same;
    }
    if (same == 1) return true;
  }
  return false;
}

// Small random loopless matroids from several families.
inline gcmb::Matroid random_matroid(gcmb::Rng& rng, int max_n = 8, int min_n = 2) {
  for (;;) {
    const int kind = static_cast<int>(gcmb::uniform_int(rng, 0, 3));
    const int n = static_cast<int>(gcmb::uniform_int(rng, min_n, max_n));
    try {
      if (kind == 0) {
        return gcmb::make_uniform(n, static_cast<int>(gcmb::uniform_int(rng, 1, std::min(n, 4))));
      }
      if (kind == 1) {
        const int v = static_cast<int>(gcmb::uniform_int(rng, 2, 5));
        std::vector<gcmb::Edge> edges;
        while (static_cast<int>(edges.size()) < n) {
          const int a = static_cast<int>(gcmb::uniform_int(rng, 0, v - 1));
          const int b = static_cast<int>(gcmb::uniform_int(rng, 0, v - 1));
          if (a != b) edges.push_back({a, b});
        }
        return gcmb::make_graphic(v, edges);
      }
      if (kind == 2) {
        const int p = gcmb::uniform_int(rng, 0, 1) ? 2 : 3;
        const int rows = static_cast<int>(gcmb::uniform_int(rng, 1, std::min(n, 4)));
        std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(n));
        for (auto& row : a) {
          for (auto& x : row) x = gcmb::uniform_int(rng, 0, p - 1);
        }
        return gcmb::make_linear(p, a);
      }
      const int classes = static_cast<int>(gcmb::uniform_int(rng, 1, 3));
      std::vector<int> class_of(n);
      std::vector<int> size(classes, 0);
      for (int& c : class_of) {
        c = static_cast<int>(gcmb::uniform_int(rng, 0, classes - 1));
        ++size[c];
      }
      std::vector<int> caps(classes);
      for (int c = 0; c < classes; ++c) {
        caps[c] = size[c] == 0 ? 0 : static_cast<int>(gcmb::uniform_int(rng, 1, size[c]));
      }
      return gcmb::make_partition(class_of, caps);
    } catch (const std::exception&) {
      // loops or empty classes; draw again
    }
  }
}

}  // namespace oracle
