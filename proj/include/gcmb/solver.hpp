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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcmb/group.hpp"
#include "gcmb/intersection.hpp"
#include "gcmb/matroid.hpp"
#include "gcmb/weight.hpp"

namespace gcmb {

// l: E -> G, one label per ground element, held as group codes.
class Labeling {
 public:
  Labeling(GroupSpec group, std::vector<int> codes);
  Labeling(GroupSpec group, const std::vector<GroupElement>& labels);

  const GroupSpec& group() const { return group_; }
  int size() const { return static_cast<int>(codes_.size()); }
  int code(int e) const { return codes_[e]; }
  const std::vector<int>& codes() const { return codes_; }
  GroupElement label(int e) const { return group_.from_code(codes_[e]); }

  // E(g)
  ElementSet fiber(int code) const;
  // |E(g)| for every code.
  std::vector<int> fiber_sizes() const;
  // Labels of the surviving elements of a minor.
  Labeling restrict(const std::vector<int>& kept) const;

 private:
  GroupSpec group_;
  std::vector<int> codes_;
};

GroupElement label_sum(const Labeling& l, ElementSet s);
int label_sum_code(const Labeling& l, ElementSet s);

// a_g = |B n E(g)|, indexed by group code.
struct Signature {
  std::vector<int> counts;
  bool operator==(const Signature&) const = default;
  std::string str() const;  // "[1,2,0]"
};

// a+ = (a_D - a_B) v 0 and a- = (a_D - a_B) ^ 0.
struct SignatureDelta {
  std::vector<int> plus;   // >= 0
  std::vector<int> minus;  // <= 0
};

Signature signature_of(const Labeling& l, BaseSet b);
GroupElement signature_label(const GroupSpec& group, const Signature& a);
int signature_label_code(const GroupSpec& group, const Signature& a);

// All a with sum r, 0 <= a_g <= caps[g] and, if a target code is given,
// sum a_g * g = target; lexicographic in code order.
void for_each_signature(const GroupSpec& group, int r, const std::vector<int>& caps,
                        std::optional<int> target,
                        const std::function<void(const Signature&)>& f);
std::vector<Signature> enumerate_signatures(const GroupSpec& group, int r,
                                            const std::vector<int>& caps,
                                            std::optional<int> target = std::nullopt);

// Optimum (or any, without weights) base with exactly a_g elements labelled g,
// by intersecting M with the partition matroid of capacities a.
std::optional<WeightedBase> base_with_signature(const Matroid& m, const Labeling& l,
                                                const Signature& a, const WeightVector* w,
                                                IntersectionStats* stats = nullptr);

// Greedy minimum-weight base; ties by ascending index. No weights = lexicographically least base.
BaseSet find_optimum_base(const Matroid& m, const WeightVector* w);

struct SolveStats {
  std::int64_t oracle_calls = 0;
  std::int64_t intersections = 0;   // base_with_signature calls
  std::int64_t signatures_tried = 0;
  std::int64_t delta_pairs = 0;     // (a+, a-) pairs considered by proximity mode
};

struct SolveResult {
  bool feasible = false;
  std::optional<BaseSet> base;
  std::optional<Weight> weight;
  std::optional<GroupElement> label;
  // False when an infeasible answer is not backed by a closeness theorem.
  bool certified = true;
  SolveStats stats;
};

struct SolveOptions {
  const WeightVector* weights = nullptr;  // nullptr: feasibility mode
  int jobs = 1;
};

SolveResult solve_enum(const Matroid& m, const Labeling& l, const GroupElement& target,
                       const SolveOptions& options = {});

enum class ProximityMode { certified_only, heuristic };

// Whether the closeness results back proximity search with this k.
bool proximity_certified(const GroupSpec& group, int k, bool optimization);
std::string proximity_certification_note(const GroupSpec& group, int k, bool optimization);

// Default proximity radius |G| - 1.
int default_proximity_k(const GroupSpec& group);

// Throws UsageError in certified_only mode when proximity_certified is false.
SolveResult solve_proximity(const Matroid& m, const Labeling& l, const GroupElement& target, int k,
                            ProximityMode mode, const SolveOptions& options = {});

// Candidate deltas around signature a_B with sum(plus) <= k, ordered by move
// size then lexicographically; exposed for tests.
std::vector<SignatureDelta> proximity_deltas(int group_order, const Signature& start, int k);

// Serial reference and OpenMP kernel for a batch of signature subproblems.
// `stop_at_first` keeps the lowest-index feasible result and discards work
// after it, so both return identical results.
struct BatchResult {
  std::optional<std::size_t> best_index;
  std::optional<WeightedBase> best;
  SolveStats stats;
};
BatchResult solve_signature_batch_serial(const Matroid& m, const Labeling& l,
                                         const std::vector<Signature>& batch,
                                         const WeightVector* w, bool stop_at_first);
BatchResult solve_signature_batch_parallel(const Matroid& m, const Labeling& l,
                                           const std::vector<Signature>& batch,
                                           const WeightVector* w, bool stop_at_first, int jobs);

}  // namespace gcmb
