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
#include <optional>
#include <string>
#include <vector>

#include "gcmb/group.hpp"
#include "gcmb/matroid.hpp"
#include "gcmb/random.hpp"
#include "gcmb/solver.hpp"
#include "gcmb/weight.hpp"

// Brute-force checks of closeness, isolation and additive-combinatorics
// statements on small matroids. Everything here enumerates all bases.

namespace gcmb {

inline constexpr std::int64_t kLabBaseGuard = 1'000'000;

struct LabelImage {
  std::vector<int> image;                 // attained codes, ascending
  std::vector<std::int64_t> multiplicity;  // by code; sums to the base count
};

LabelImage label_image(const Matroid& m, const Labeling& l);

// A certificate that no (optimum) g-base lies within distance k of the
// (optimum) base `a`: `b` is the nearest such base and distance > k.
struct Witness {
  std::string matroid_id;
  Matroid matroid;
  Labeling labeling;
  std::optional<WeightVector> weights;
  GroupElement target;
  BaseSet a;
  BaseSet b;
  int distance = 0;
  std::vector<int> origin;  // element index -> index in the matroid it was reduced from

  std::string str() const;
};

struct ClosenessReport {
  // Max over attainable g and (optimum) bases A of the distance to the nearest
  // (optimum) g-base; the labeling is k-close iff required_k <= k.
  int required_k = 0;
  std::optional<Witness> witness;  // set iff required_k > k
  bool ok() const { return !witness.has_value(); }
};

ClosenessReport check_k_close(const Matroid& m, const Labeling& l, int k,
                              const std::string& id = "");
ClosenessReport check_strongly_k_close(const Matroid& m, const Labeling& l, const WeightVector& w,
                                       int k, const std::string& id = "");

// Contract A n B (shifting the target by -l(A n B)) and delete E \ (A u B).
// The result is a block matroid with blocks A', B' at the same distance.
Witness reduce_witness(const Witness& w);

// Recomputes every witness condition from scratch.
bool witness_is_valid(const Witness& w, int k);

// n = 2r required (UsageError otherwise). First block in lexicographic order
// that is the unique base with its label, if any.
std::optional<BaseSet> is_block_isolating(const Matroid& m, const Labeling& l);
// Same, with uniqueness only among blocks.
std::optional<BaseSet> is_strong_block_isolating(const Matroid& m, const Labeling& l);

struct SchrijverSeymourReport {
  int image_size = 0;
  std::vector<int> image;
  Subgroup stabilizer;
  CosetPartition cosets;
  std::vector<int> coset_ranks;  // r(E(Q)) per coset
  int rank_sum = 0;
  int rank = 0;
  std::int64_t bound = 0;  // |H| * min(sum r(E(Q)) - r(M) + 1, |G|/|H|)
  bool holds = true;
  // Prime cyclic groups: min(p, sum_g r(E(g)) - r(M) + 1).
  std::optional<std::int64_t> prime_bound;
  std::optional<bool> prime_holds;

  std::string str() const;
};

SchrijverSeymourReport check_schrijver_seymour(const Matroid& m, const Labeling& l);

Labeling random_labeling(const GroupSpec& group, int n, Rng& rng);
WeightVector random_weights(int n, Rng& rng, int lo = -5, int hi = 5);

// Structured weights used by the strong closeness checks: zero, all ones, and
// +1 / -1 on the two blocks of a block matroid.
std::vector<WeightVector> structured_weights(const Matroid& m);

struct SboSuiteReport {
  std::string matroid_id;
  std::string group;
  int k = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<Witness> refutations;  // any entry is an implementation bug
  bool ok() const { return refutations.empty(); }
};

// check_strongly_k_close with k = D(G) - 1 over `trials` seeded
// (labeling, weight) pairs. UsageError unless M is strongly base orderable.
SboSuiteReport sbo_strong_closeness_suite(const Matroid& m, const GroupSpec& group, int trials,
                                          std::uint64_t seed, const std::string& id = "",
                                          int jobs = 1);

}  // namespace gcmb
