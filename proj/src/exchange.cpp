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

#include "gcmb/exchange.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "gcmb/errors.hpp"
#include "gcmb/intersection.hpp"

namespace gcmb {

bool is_block(const Matroid& m, BaseSet b) {
  return m.is_base(b) && m.is_base(m.ground() - b);
}

std::optional<BlockPair> find_blocks(const Matroid& m) {
  if (m.size() != 2 * m.rank()) return std::nullopt;
  const ElementSet common = max_common_independent(m, dual(m));
  if (common.size() != m.rank()) return std::nullopt;
  return BlockPair{common, m.ground() - common};
}

std::optional<BlockPair> find_blocks_brute(const Matroid& m) {
  if (m.size() != 2 * m.rank()) return std::nullopt;
  for (BaseSet b : enumerate_bases(m)) {
    if (m.is_base(m.ground() - b)) return BlockPair{b, m.ground() - b};
  }
  return std::nullopt;
}

ExchangeBijection brualdi_bijection(const Matroid& m, BaseSet a, BaseSet b) {
  if (!m.is_base(a) || !m.is_base(b)) throw UsageError("brualdi_bijection needs two bases");
  const std::vector<int> left = (a - b).elements();
  const std::vector<int> right = (b - a).elements();
  const int k = static_cast<int>(left.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (m.independent(a.without(left[i]).with(right[j]))) adj[i].push_back(j);
    }
  }
  std::vector<int> match_right(k, -1);
  std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
    for (int j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (match_right[j] < 0 || augment(match_right[j], seen)) {
        match_right[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i) {
    std::vector<char> seen(k, 0);
    if (!augment(i, seen)) {
      throw InternalError("no exchange bijection between " + a.str() + " and " + b.str() +
                          "; the independence oracle is not a matroid");
    }
  }
  ExchangeBijection out;
  for (int j = 0; j < k; ++j) out.pairs.emplace_back(left[match_right[j]], right[j]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

int exchange_surplus(const Matroid& m, ElementSet a1, ElementSet b1) {
  return a1.size() + b1.size() - m.rank(a1 | b1);
}

std::optional<Exchange> find_exchange(const Matroid& m, BaseSet a, ElementSet a1, ElementSet b1,
                                      int t) {
  if (!m.is_base(a)) throw UsageError("find_exchange needs a base A");
  if (!a1.subset_of(a)) throw UsageError("A1 must be a subset of A");
  if (!b1.disjoint(a)) throw UsageError("B1 must be disjoint from A");
  if (!m.independent(b1)) throw UsageError("B1 must be independent");
  if (t < 0 || t > a1.size() || t > b1.size()) return std::nullopt;
  const ElementSet kept = a - a1;
  std::optional<Exchange> found;
  for_each_subset_of_size(b1, t, [&](ElementSet b2) {
    ElementSet grown = kept | b2;
    if (!m.independent(grown)) return true;
    a1.for_each([&](int e) {
      if (grown.size() < m.rank() && m.independent(grown.with(e))) grown = grown.with(e);
    });
    if (grown.size() != m.rank()) return true;
    found = Exchange{a1 - grown, b2};
    return false;
  });
  return found;
}

namespace {

// Tries every bijection left -> right (by permutation of `right`) and returns
// the first for which every subset X of `left` selected by `allowed(mask)` keeps
// start - X + f(X) a base.
template <typename Allowed>
std::optional<std::vector<int>> search_bijection(const Matroid& m, ElementSet start,
                                                 const std::vector<int>& left,
                                                 std::vector<int> right, Allowed allowed) {
  const int k = static_cast<int>(left.size());
  std::sort(right.begin(), right.end());
  do {
    bool ok = true;
    for (std::uint32_t mask = 1; mask < (1u << k) && ok; ++mask) {
      if (!allowed(mask)) continue;
      ElementSet swapped = start;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1u) swapped = swapped.without(left[i]).with(right[i]);
      }
      if (!m.independent(swapped)) ok = false;
    }
    if (ok) return right;
  } while (std::next_permutation(right.begin(), right.end()));
  return std::nullopt;
}

void check_enumeration_guards(const Matroid& m, std::size_t base_count) {
  if (m.rank() > 5) throw CapacityError("strong base orderability check limited to rank <= 5");
  if (base_count > 5000) throw CapacityError("strong base orderability check limited to 5000 bases");
}

}  // namespace

std::optional<ExchangeBijection> sbo_bijection(const Matroid& m, BaseSet a, BaseSet b) {
  const std::vector<int> left = (a - b).elements();
  if (left.size() > 8) throw CapacityError("bijection search limited to |A \\ B| <= 8");
  const auto right = search_bijection(m, a, left, (b - a).elements(),
                                      [](std::uint32_t) { return true; });
  if (!right) return std::nullopt;
  ExchangeBijection out;
  for (std::size_t i = 0; i < left.size(); ++i) out.pairs.emplace_back(left[i], (*right)[i]);
  return out;
}

SboReport is_strongly_base_orderable(const Matroid& m) {
  const std::vector<BaseSet> bases = enumerate_bases(m);
  check_enumeration_guards(m, bases.size());
  // The property for (A, B) under f is the property for (B, A) under f^-1
  // applied to complements within A \ B, so unordered pairs suffice.
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if (!sbo_bijection(m, bases[i], bases[j])) {
        return SboReport{false, std::make_pair(bases[i], bases[j])};
      }
    }
  }
  return SboReport{};
}

bool is_k_replaceable(const Matroid& m, BaseSet a, BaseSet b, int k) {
  const std::vector<int> left = (b - a).elements();
  if (left.size() > 8) throw CapacityError("bijection search limited to |A \\ B| <= 8");
  return search_bijection(m, b, left, (a - b).elements(), [k](std::uint32_t mask) {
           return std::popcount(mask) <= k;
         }).has_value();
}

bool is_k_replaceable(const Matroid& m, int k) {
  const std::vector<BaseSet> bases = enumerate_bases(m);
  check_enumeration_guards(m, bases.size());
  for (BaseSet a : bases) {
    for (BaseSet b : bases) {
      if (!is_k_replaceable(m, a, b, k)) return false;
    }
  }
  return true;
}

}  // namespace gcmb
