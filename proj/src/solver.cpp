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

#include "gcmb/solver.hpp"

#include <algorithm>
#include <numeric>

#include "gcmb/errors.hpp"
#include "gcmb/parallel.hpp"

namespace gcmb {

Labeling::Labeling(GroupSpec group, std::vector<int> codes)
    : group_(std::move(group)), codes_(std::move(codes)) {
  for (int c : codes_) {
    if (c < 0 || c >= group_.order()) throw UsageError("label code out of range for " + group_.name());
  }
}

Labeling::Labeling(GroupSpec group, const std::vector<GroupElement>& labels)
    : group_(std::move(group)) {
  codes_.reserve(labels.size());
  for (const GroupElement& g : labels) codes_.push_back(group_.code(g));
}

ElementSet Labeling::fiber(int code) const {
  ElementSet s;
  for (int e = 0; e < size(); ++e) {
    if (codes_[e] == code) s = s.with(e);
  }
  return s;
}

std::vector<int> Labeling::fiber_sizes() const {
  std::vector<int> sizes(group_.order(), 0);
  for (int c : codes_) ++sizes[c];
  return sizes;
}

Labeling Labeling::restrict(const std::vector<int>& kept) const {
  std::vector<int> codes;
  codes.reserve(kept.size());
  for (int e : kept) codes.push_back(codes_[e]);
  return Labeling(group_, std::move(codes));
}

int label_sum_code(const Labeling& l, ElementSet s) {
  int sum = 0;
  s.for_each([&](int e) { sum = l.group().add_codes(sum, l.code(e)); });
  return sum;
}

GroupElement label_sum(const Labeling& l, ElementSet s) {
  return l.group().from_code(label_sum_code(l, s));
}

std::string Signature::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(counts[i]);
  }
  return s + "]";
}

Signature signature_of(const Labeling& l, BaseSet b) {
  Signature a{std::vector<int>(l.group().order(), 0)};
  b.for_each([&](int e) { ++a.counts[l.code(e)]; });
  return a;
}

int signature_label_code(const GroupSpec& group, const Signature& a) {
  int sum = 0;
  for (int g = 0; g < static_cast<int>(a.counts.size()); ++g) {
    if (a.counts[g] != 0) sum = group.add_codes(sum, group.mul_code(a.counts[g], g));
  }
  return sum;
}

GroupElement signature_label(const GroupSpec& group, const Signature& a) {
  return group.from_code(signature_label_code(group, a));
}

namespace {

// Vectors of length ub.size() summing to `total` with v[i] <= ub[i], lexicographic.
template <typename F>
void for_each_bounded_composition(const std::vector<int>& ub, int total, F&& f) {
  const int len = static_cast<int>(ub.size());
  std::vector<int> suffix_cap(len + 1, 0);
  for (int i = len - 1; i >= 0; --i) suffix_cap[i] = suffix_cap[i + 1] + ub[i];
  std::vector<int> v(len, 0);
  auto rec = [&](auto& self, int i, int remaining) -> void {
    if (i == len) {
      if (remaining == 0) f(v);
      return;
    }
    const int lo = std::max(0, remaining - suffix_cap[i + 1]);
    const int hi = std::min(ub[i], remaining);
    for (int x = lo; x <= hi; ++x) {
      v[i] = x;
      self(self, i + 1, remaining - x);
    }
    v[i] = 0;
  };
  if (total <= suffix_cap[0]) rec(rec, 0, total);
}

}  // namespace

void for_each_signature(const GroupSpec& group, int r, const std::vector<int>& caps,
                        std::optional<int> target,
                        const std::function<void(const Signature&)>& f) {
  if (static_cast<int>(caps.size()) != group.order()) throw UsageError("caps length must equal |G|");
  for_each_bounded_composition(caps, r, [&](const std::vector<int>& v) {
    Signature a{v};
    if (target && signature_label_code(group, a) != *target) return;
    f(a);
  });
}

std::vector<Signature> enumerate_signatures(const GroupSpec& group, int r,
                                            const std::vector<int>& caps,
                                            std::optional<int> target) {
  std::vector<Signature> out;
  for_each_signature(group, r, caps, target, [&](const Signature& a) { out.push_back(a); });
  return out;
}

std::optional<WeightedBase> base_with_signature(const Matroid& m, const Labeling& l,
                                                const Signature& a, const WeightVector* w,
                                                IntersectionStats* stats) {
  if (l.size() != m.size()) throw UsageError("labeling size differs from ground set size");
  if (static_cast<int>(a.counts.size()) != l.group().order()) {
    throw UsageError("signature length must equal |G|");
  }
  const std::vector<int> sizes = l.fiber_sizes();
  int total = 0;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    if (a.counts[g] < 0 || a.counts[g] > sizes[g]) {
      throw UsageError("signature " + a.str() + " exceeds the label fiber sizes");
    }
    total += a.counts[g];
  }
  if (total != m.rank()) throw UsageError("signature " + a.str() + " does not sum to r(M)");

  const Matroid partition = make_partition(l.codes(), a.counts);
  if (w) return min_weight_common_base(m, partition, *w, stats);
  const ElementSet common = max_common_independent(m, partition, stats);
  if (common.size() != m.rank()) return std::nullopt;
  return WeightedBase{common, Weight(0)};
}

BaseSet find_optimum_base(const Matroid& m, const WeightVector* w) {
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  if (w) {
    if (static_cast<int>(w->size()) != m.size()) throw UsageError("weight vector length mismatch");
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return (*w)[a] < (*w)[b]; });
  }
  ElementSet acc;
  for (int e : order) {
    if (acc.size() == m.rank()) break;
    if (m.independent(acc.with(e))) acc = acc.with(e);
  }
  return acc;
}

namespace {

struct SlotResult {
  std::optional<WeightedBase> base;
  IntersectionStats stats;
};

SlotResult solve_slot(const Matroid& m, const Labeling& l, const Signature& a,
                      const WeightVector* w) {
  SlotResult out;
  out.base = base_with_signature(m, l, a, w, &out.stats);
  return out;
}

// Folds slot i into the running result. Returns true when the caller should stop.
bool fold(BatchResult& acc, std::size_t i, const SlotResult& slot, bool stop_at_first) {
  acc.stats.oracle_calls += slot.stats.oracle_calls;
  ++acc.stats.intersections;
  ++acc.stats.signatures_tried;
  if (!slot.base) return false;
  if (!acc.best || slot.base->weight < acc.best->weight) {
    acc.best = slot.base;
    acc.best_index = i;
  }
  return stop_at_first;
}

}  // namespace

BatchResult solve_signature_batch_serial(const Matroid& m, const Labeling& l,
                                         const std::vector<Signature>& batch,
                                         const WeightVector* w, bool stop_at_first) {
  BatchResult acc;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (fold(acc, i, solve_slot(m, l, batch[i], w), stop_at_first)) break;
  }
  return acc;
}

BatchResult solve_signature_batch_parallel(const Matroid& m, const Labeling& l,
                                           const std::vector<Signature>& batch,
                                           const WeightVector* w, bool stop_at_first, int jobs) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1) return solve_signature_batch_serial(m, l, batch, w, stop_at_first);
  BatchResult acc;
  const std::size_t chunk = stop_at_first ? static_cast<std::size_t>(jobs) * 4 : batch.size();
  for (std::size_t begin = 0; begin < batch.size(); begin += chunk) {
    const std::size_t end = std::min(batch.size(), begin + chunk);
    std::vector<SlotResult> slots(end - begin);
    parallel_for(static_cast<std::int64_t>(slots.size()), jobs, [&](std::int64_t i) {
      slots[i] = solve_slot(m, l, batch[begin + i], w);
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (fold(acc, begin + i, slots[i], stop_at_first)) return acc;
    }
  }
  return acc;
}

namespace {

SolveResult finish(const Matroid& m, const Labeling& l, const BatchResult& batch,
                   const SolveOptions& options) {
  SolveResult result;
  result.stats.oracle_calls = batch.stats.oracle_calls;
  result.stats.intersections = batch.stats.intersections;
  result.stats.signatures_tried = batch.stats.signatures_tried;
  if (batch.best) {
    result.feasible = true;
    result.base = batch.best->base;
    result.label = label_sum(l, batch.best->base);
    if (options.weights) result.weight = batch.best->weight;
    if (!m.is_base(*result.base)) throw InternalError("solver returned a non-base");
  }
  return result;
}

void check_instance(const Matroid& m, const Labeling& l, const GroupElement& target) {
  if (l.size() != m.size()) throw UsageError("labeling size differs from ground set size");
  (void)l.group().code(target);
}

}  // namespace

SolveResult solve_enum(const Matroid& m, const Labeling& l, const GroupElement& target,
                       const SolveOptions& options) {
  check_instance(m, l, target);
  const std::vector<Signature> sigs =
      enumerate_signatures(l.group(), m.rank(), l.fiber_sizes(), l.group().code(target));
  const bool first = options.weights == nullptr;
  const BatchResult batch =
      solve_signature_batch_parallel(m, l, sigs, options.weights, first, options.jobs);
  return finish(m, l, batch, options);
}

int default_proximity_k(const GroupSpec& group) { return group.order() - 1; }

bool proximity_certified(const GroupSpec& group, int k, bool optimization) {
  if (optimization) return group.order() <= 4 && k >= davenport(group) - 1;
  return closeness_class(group) == ClosenessClass::proven && k >= group.order() - 1;
}

std::string proximity_certification_note(const GroupSpec& group, int k, bool optimization) {
  if (proximity_certified(group, k, optimization)) return "certified";
  if (optimization) {
    return "optimization proximity is certified only for |G| <= 4 with k >= D(G)-1 = " +
           std::to_string(group.order() <= 16 ? davenport(group) - 1 : -1) + "; got " +
           group.name() + ", k=" + std::to_string(k);
  }
  if (closeness_class(group) != ClosenessClass::proven) {
    return group.name() +
           " is not known to be (|G|-1)-close (order not pq, not cyclic of prime-power order)";
  }
  return "feasibility proximity needs k >= |G|-1 = " + std::to_string(group.order() - 1) +
         "; got k=" + std::to_string(k);
}

std::vector<SignatureDelta> proximity_deltas(int group_order, const Signature& start, int k) {
  std::vector<SignatureDelta> out;
  const std::vector<int> unbounded(group_order, k);
  for (int s = 0; s <= k; ++s) {
    for_each_bounded_composition(unbounded, s, [&](const std::vector<int>& plus) {
      std::vector<int> minus_cap(group_order);
      for (int g = 0; g < group_order; ++g) {
        minus_cap[g] = plus[g] > 0 ? 0 : std::min(k, start.counts[g]);
      }
      for_each_bounded_composition(minus_cap, s, [&](const std::vector<int>& minus) {
        SignatureDelta d{plus, std::vector<int>(group_order)};
        for (int g = 0; g < group_order; ++g) d.minus[g] = -minus[g];
        out.push_back(std::move(d));
      });
    });
  }
  return out;
}

SolveResult solve_proximity(const Matroid& m, const Labeling& l, const GroupElement& target, int k,
                            ProximityMode mode, const SolveOptions& options) {
  check_instance(m, l, target);
  if (k < 0) throw UsageError("proximity radius k must be >= 0");
  const bool optimization = options.weights != nullptr;
  const bool certified = proximity_certified(l.group(), k, optimization);
  if (mode == ProximityMode::certified_only && !certified) {
    throw UsageError("refusing uncertified proximity search: " +
                     proximity_certification_note(l.group(), k, optimization) +
                     " (use heuristic mode to run anyway)");
  }
  const BaseSet start = find_optimum_base(m, options.weights);
  const Signature a_b = signature_of(l, start);
  const std::vector<int> caps = l.fiber_sizes();
  const int target_code = l.group().code(target);

  std::vector<Signature> candidates;
  const std::vector<SignatureDelta> deltas = proximity_deltas(l.group().order(), a_b, k);
  for (const SignatureDelta& d : deltas) {
    Signature a_d{a_b.counts};
    bool valid = true;
    for (int g = 0; g < l.group().order(); ++g) {
      a_d.counts[g] += d.plus[g] + d.minus[g];
      if (a_d.counts[g] < 0 || a_d.counts[g] > caps[g]) valid = false;
    }
    if (valid && signature_label_code(l.group(), a_d) == target_code) {
      candidates.push_back(std::move(a_d));
    }
  }
  const bool first = !optimization;
  const BatchResult batch =
      solve_signature_batch_parallel(m, l, candidates, options.weights, first, options.jobs);
  SolveResult result = finish(m, l, batch, options);
  result.stats.delta_pairs = static_cast<std::int64_t>(deltas.size());
  result.certified = certified;
  return result;
}

}  // namespace gcmb
