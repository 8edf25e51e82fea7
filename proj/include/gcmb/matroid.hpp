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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcmb/element_set.hpp"

namespace gcmb {

enum class MatroidKind { uniform, graphic, linear, partition, explicit_bases, minor, dual };

std::string to_string(MatroidKind kind);

namespace detail {

class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual int ground_size() const = 0;
  virtual MatroidKind kind() const = 0;
  virtual bool independent(ElementSet x) const = 0;
};

}  // namespace detail

// Independence-oracle matroid on elements {0, ..., n-1}. Cheap to copy; the
// oracle is immutable and shared.
class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const detail::Oracle> oracle);

  int size() const { return oracle_->ground_size(); }
  MatroidKind kind() const { return oracle_->kind(); }
  ElementSet ground() const { return ElementSet::prefix(size()); }

  bool independent(ElementSet x) const { return oracle_->independent(x); }
  // Greedy in ascending index order.
  int rank(ElementSet x) const;
  int rank() const { return rank_; }
  bool is_base(ElementSet x) const { return x.size() == rank_ && independent(x); }
  // Extends an independent set to a base using ground elements in ascending order.
  ElementSet extend_to_base(ElementSet independent_set) const;

  const detail::Oracle& oracle() const { return *oracle_; }

 private:
  std::shared_ptr<const detail::Oracle> oracle_;
  int rank_;
};

using BaseSet = ElementSet;

// Families. All reject loops.
Matroid make_uniform(int n, int r);

struct Edge {
  int u;
  int v;
};
Matroid make_graphic(int vertices, const std::vector<Edge>& edges);

// Column matroid of `rows` over GF(p); one column per element.
Matroid make_linear(int p, const std::vector<std::vector<std::int64_t>>& rows);

// Validates the pairwise exchange axiom unless `trust`; n > 12 requires `trust`.
Matroid make_explicit(int n, const std::vector<ElementSet>& bases, bool trust = false);

// Element e belongs to class_of[e]; at most capacities[c] elements per class.
// Classes with capacity zero are allowed (their elements are loops), since the
// solver's signature matroids need them.
Matroid make_partition(const std::vector<int>& class_of, const std::vector<int>& capacities);

// Minors. Surviving elements keep their relative order and are renumbered
// 0..n'-1; `kept` maps new index -> parent index.
struct Minor {
  Matroid matroid;
  std::vector<int> kept;
};

// M / contract \ remove. `contract` must be independent and disjoint from `remove`.
Minor minor(const Matroid& m, ElementSet contract, ElementSet remove);
Minor delete_elements(const Matroid& m, ElementSet f);
Minor contract(const Matroid& m, ElementSet f);
Matroid dual(const Matroid& m);

// Direct sum; elements of `b` follow those of `a`.
Matroid direct_sum(const Matroid& a, const Matroid& b);

bool has_loop(const Matroid& m);
// Exhaustive comparison of the two oracles over all subsets (n <= 20).
bool oracle_equivalent(const Matroid& a, const Matroid& b);

inline constexpr std::int64_t kBaseEnumerationGuard = 10'000'000;

std::int64_t binomial(int n, int k);

// All bases in lexicographic order. Throws CapacityError when C(n, r) exceeds `guard`.
std::vector<BaseSet> enumerate_bases(const Matroid& m, std::int64_t guard = kBaseEnumerationGuard);

// Checks emptyset independence, heredity and augmentation exhaustively (n <= 12).
// Returns a description of the first failure.
std::optional<std::string> check_axioms(const Matroid& m);

// For an explicit base list: first (A, B) pair violating base exchange, if any.
std::optional<std::pair<ElementSet, ElementSet>> find_exchange_violation(
    const std::vector<ElementSet>& bases);

}  // namespace gcmb
