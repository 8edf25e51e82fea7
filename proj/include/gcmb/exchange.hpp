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

#include <optional>
#include <utility>
#include <vector>

#include "gcmb/matroid.hpp"

namespace gcmb {

struct BlockPair {
  BaseSet first;
  BaseSet second;
};

// Two disjoint bases covering the ground set, via intersecting M with its dual.
std::optional<BlockPair> find_blocks(const Matroid& m);
// Reference search over base pairs; lexicographically least first block.
std::optional<BlockPair> find_blocks_brute(const Matroid& m);

bool is_block(const Matroid& m, BaseSet b);

// Pairs (a, f(a)) with a in A \ B, f(a) in B \ A, sorted by a.
struct ExchangeBijection {
  std::vector<std::pair<int, int>> pairs;
};

// Bijection f: A\B -> B\A with A - a + f(a) a base for every a, found as a
// perfect matching. Throws InternalError if none exists (impossible for a
// genuine matroid).
ExchangeBijection brualdi_bijection(const Matroid& m, BaseSet a, BaseSet b);

// |A1| + |B1| - r(A1 u B1).
int exchange_surplus(const Matroid& m, ElementSet a1, ElementSet b1);

struct Exchange {
  ElementSet removed;  // A2 within A1
  ElementSet added;    // B2 within B1
};

// A2 in A1 and B2 in B1, |A2| = |B2| = t, with A - A2 + B2 a base. t-subsets of
// B1 are tried in lexicographic order and the first success is returned.
// Always succeeds when exchange_surplus >= t.
std::optional<Exchange> find_exchange(const Matroid& m, BaseSet a, ElementSet a1, ElementSet b1,
                                      int t);

// Bijection f: A -> B fixing A n B with A - X + f(X) a base for all X in A.
// Only the moved part (A\B -> B\A) is returned.
std::optional<ExchangeBijection> sbo_bijection(const Matroid& m, BaseSet a, BaseSet b);

struct SboReport {
  bool strongly_base_orderable = true;
  std::optional<std::pair<BaseSet, BaseSet>> violation;
};

// Exhaustive over base pairs and bijections; requires r <= 5 and at most 5000 bases.
SboReport is_strongly_base_orderable(const Matroid& m);

// Some bijection f: B\A -> A\B has B - B' + f(B') a base for all B' in B\A with |B'| <= k.
// Requires |A \ B| <= 8.
bool is_k_replaceable(const Matroid& m, BaseSet a, BaseSet b, int k);
// Every base pair (both orders) is k-replaceable; same guards as the SBO check.
bool is_k_replaceable(const Matroid& m, int k);

}  // namespace gcmb
