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

#include <doctest.h>

#include <set>

#include "gcmb/catalog.hpp"
#include "gcmb/errors.hpp"
#include "gcmb/lab.hpp"
#include "gcmb/solver.hpp"
#include "oracles.hpp"

using namespace gcmb;

TEST_CASE("label sums and signatures") {
  const GroupSpec z4 = GroupSpec::parse("Z4");
  const Labeling ones(z4, std::vector<int>(6, 1));
  CHECK(label_sum(ones, ElementSet{}).is_zero());
  CHECK(label_sum(ones, ElementSet::prefix(6)) == z4.element({2}));
  const GroupSpec v4 = GroupSpec::parse("Z2xZ2");
  const Labeling mixed(v4, {v4.element({1, 0}), v4.element({1, 1}), v4.element({0, 1})});
  CHECK(label_sum(mixed, ElementSet{0, 1, 2}) == v4.element({0, 0}));
  CHECK(label_sum(mixed, ElementSet{0, 1}) == v4.element({0, 1}));
  CHECK(signature_label(z4, Signature{{1, 2, 0, 0}}) == z4.element({2}));
  const Labeling zeros(z4, std::vector<int>(4, 0));
  CHECK(signature_of(zeros, ElementSet{0, 1}).counts == std::vector<int>{2, 0, 0, 0});

  Rng rng = make_rng(9, 0);
  for (const NamedMatroid& nm : bundled_matroids()) {
    const Labeling l = random_labeling(GroupSpec::parse("Z2xZ4"), nm.matroid.size(), rng);
    for (BaseSet b : enumerate_bases(nm.matroid)) {
      const Signature a = signature_of(l, b);
      CHECK(signature_label(l.group(), a) == label_sum(l, b));
      CHECK(std::accumulate(a.counts.begin(), a.counts.end(), 0) == nm.matroid.rank());
    }
  }
}

TEST_CASE("signature enumeration") {
  const GroupSpec z2 = GroupSpec::parse("Z2");
  CHECK(enumerate_signatures(z2, 3, {3, 3}).size() == 4);
  for (auto [r, order] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}}) {
    const GroupSpec g = GroupSpec::from_moduli({order});
    const auto all = enumerate_signatures(g, r, std::vector<int>(order, r));
    CHECK(static_cast<std::int64_t>(all.size()) == binomial(r + order - 1, order - 1));
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Signature& a, const Signature& b) { return a.counts < b.counts; }));
    std::size_t total = 0;
    for (int t = 0; t < order; ++t) total += enumerate_signatures(g, r, std::vector<int>(order, r), t).size();
    CHECK(total == all.size());
  }
  // Caps are respected.
  for (const Signature& a : enumerate_signatures(GroupSpec::parse("Z3"), 4, {1, 2, 3})) {
    CHECK(a.counts[0] <= 1);
    CHECK(a.counts[1] <= 2);
  }
}

TEST_CASE("bases with a prescribed signature") {
  const GroupSpec z2 = GroupSpec::parse("Z2");
  const Matroid u24 = make_uniform(4, 2);
  const Labeling l(z2, {0, 0, 1, 1});
  const auto b = base_with_signature(u24, l, Signature{{2, 0}}, nullptr);
  REQUIRE(b);
  CHECK(b->base == ElementSet{0, 1});
  CHECK_THROWS_AS(base_with_signature(u24, l, Signature{{0, 3}}, nullptr), UsageError);
  const Matroid pairs = make_partition({0, 0, 1, 1}, {1, 1});
  CHECK_FALSE(base_with_signature(pairs, l, Signature{{2, 0}}, nullptr).has_value());

  Rng rng = make_rng(10, 0);
  for (const NamedMatroid& nm : bundled_matroids()) {
    const auto bases = enumerate_bases(nm.matroid);
    for (int trial = 0; trial < 50; ++trial) {
      const GroupSpec g = GroupSpec::from_moduli({static_cast<int>(uniform_int(rng, 2, 4))});
      const Labeling lab = random_labeling(g, nm.matroid.size(), rng);
      std::set<std::vector<int>> attainable;
      for (BaseSet x : bases) attainable.insert(signature_of(lab, x).counts);
      for (const Signature& a : enumerate_signatures(g, nm.matroid.rank(), lab.fiber_sizes())) {
        const auto got = base_with_signature(nm.matroid, lab, a, nullptr);
        CHECK(got.has_value() == attainable.contains(a.counts));
        if (got) CHECK(signature_of(lab, got->base) == a);
      }
    }
  }
}

TEST_CASE("greedy optimum bases") {
  Rng rng = make_rng(12, 0);
  for (const NamedMatroid& nm : bundled_matroids()) {
    const auto bases = oracle::bases(nm.matroid);
    CHECK(find_optimum_base(nm.matroid, nullptr) == bases.front());
    const WeightVector flat(nm.matroid.size(), Weight(2));
    CHECK(find_optimum_base(nm.matroid, &flat) == bases.front());
    for (int trial = 0; trial < 50; ++trial) {
      const WeightVector w = random_weights(nm.matroid.size(), rng);
      const BaseSet b = find_optimum_base(nm.matroid, &w);
      CHECK(nm.matroid.is_base(b));
      Weight best = oracle::weight(w, bases.front());
      for (BaseSet x : bases) best = std::min(best, oracle::weight(w, x));
      CHECK(oracle::weight(w, b) == best);
    }
  }
}

TEST_CASE("solve_enum matches brute force") {
  const BuiltinInstance tight = tight_example(4);
  const SolveResult r = solve_enum(tight.matroid, *tight.labeling, tight.labeling->group().zero());
  CHECK(r.feasible);
  CHECK(*r.base == ElementSet{3, 4, 5});

  Rng rng = make_rng(13, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const GroupSpec g = GroupSpec::from_moduli({static_cast<int>(uniform_int(rng, 2, 6))});
    const Labeling l = random_labeling(g, m.size(), rng);
    const WeightVector w = random_weights(m.size(), rng);
    const auto bases = oracle::bases(m);
    const int target = static_cast<int>(uniform_int(rng, 0, g.order() - 1));
    const auto expected = oracle::min_g_base(bases, g, l.codes(), target, &w);
    SolveOptions options;
    options.weights = &w;
    const SolveResult got = solve_enum(m, l, g.from_code(target), options);
    REQUIRE(got.feasible == expected.feasible);
    if (got.feasible) {
      CHECK(*got.weight == expected.weight);
      CHECK(label_sum(l, *got.base) == g.from_code(target));
      CHECK(m.is_base(*got.base));
    }
    const SolveResult plain = solve_enum(m, l, g.from_code(target));
    CHECK(plain.feasible == expected.feasible);
  }
}

TEST_CASE("proximity deltas") {
  const Signature start{{2, 1, 0}};
  const auto deltas = proximity_deltas(3, start, 2);
  CHECK(deltas.front().plus == std::vector<int>{0, 0, 0});
  for (const SignatureDelta& d : deltas) {
    int plus = 0, minus = 0;
    for (int g = 0; g < 3; ++g) {
      CHECK(d.plus[g] >= 0);
      CHECK(d.minus[g] <= 0);
      CHECK((d.plus[g] == 0 || d.minus[g] == 0));
      CHECK(-d.minus[g] <= start.counts[g]);
      plus += d.plus[g];
      minus += d.minus[g];
    }
    CHECK(plus == -minus);
    CHECK(plus <= 2);
  }
  for (int order = 2; order <= 6; ++order) {
    for (int k = 0; k < order; ++k) {
      const Signature s{std::vector<int>(order, k)};
      CHECK(static_cast<std::int64_t>(proximity_deltas(order, s, k).size()) <=
            binomial(k + order - 1, k) * binomial(k + order - 1, k));
    }
  }
}

TEST_CASE("proximity search") {
  const GroupSpec z4 = GroupSpec::parse("Z4");
  const BuiltinInstance tight = tight_example(4);
  const SolveResult r = solve_proximity(tight.matroid, *tight.labeling, z4.zero(), 3,
                                        ProximityMode::certified_only);
  CHECK(r.feasible);
  CHECK(r.certified);
  CHECK(*r.base == ElementSet{3, 4, 5});
  CHECK(r.stats.intersections <= binomial(6, 3) * binomial(6, 3));
  // Too small a radius: refused when certification is requested, runs otherwise.
  CHECK_THROWS_AS(solve_proximity(tight.matroid, *tight.labeling, z4.zero(), 2,
                                  ProximityMode::certified_only),
                  UsageError);
  const SolveResult h = solve_proximity(tight.matroid, *tight.labeling, z4.zero(), 2,
                                        ProximityMode::heuristic);
  CHECK_FALSE(h.feasible);
  CHECK_FALSE(h.certified);
  // k = 0: feasible iff the greedy base has the target label.
  const SolveResult k0 = solve_proximity(tight.matroid, *tight.labeling, z4.from_code(3), 0,
                                         ProximityMode::heuristic);
  CHECK(k0.feasible);
  CHECK(proximity_certified(GroupSpec::parse("Z6"), 5, false));
  CHECK_FALSE(proximity_certified(GroupSpec::parse("Z2xZ4"), 7, false));
  CHECK(proximity_certified(GroupSpec::parse("Z2xZ2"), 2, true));
  CHECK_FALSE(proximity_certified(GroupSpec::parse("Z5"), 4, true));

  Rng rng = make_rng(14, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const GroupSpec g = GroupSpec::from_moduli({static_cast<int>(uniform_int(rng, 2, 6))});
    const Labeling l = random_labeling(g, m.size(), rng);
    const GroupElement target = g.from_code(static_cast<int>(uniform_int(rng, 0, g.order() - 1)));
    const SolveResult p = solve_proximity(m, l, target, g.order() - 1, ProximityMode::certified_only);
    CHECK(p.feasible == solve_enum(m, l, target).feasible);
    if (p.feasible) CHECK(label_sum(l, *p.base) == target);
  }
}

TEST_CASE("serial and parallel signature batches agree") {
  Rng rng = make_rng(15, 0);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const GroupSpec g = GroupSpec::from_moduli({static_cast<int>(uniform_int(rng, 2, 6))});
    const Labeling l = random_labeling(g, m.size(), rng);
    const WeightVector w = random_weights(m.size(), rng);
    const auto batch = enumerate_signatures(g, m.rank(), l.fiber_sizes());
    for (bool first : {true, false}) {
      for (const WeightVector* wp : {static_cast<const WeightVector*>(nullptr), &w}) {
        const BatchResult s = solve_signature_batch_serial(m, l, batch, wp, first);
        for (int jobs : {2, 8}) {
          const BatchResult p = solve_signature_batch_parallel(m, l, batch, wp, first, jobs);
          CHECK(s.best_index == p.best_index);
          CHECK(s.best.has_value() == p.best.has_value());
          if (s.best) {
            CHECK(s.best->base == p.best->base);
            CHECK(s.best->weight == p.best->weight);
          }
          CHECK(s.stats.oracle_calls == p.stats.oracle_calls);
          CHECK(s.stats.intersections == p.stats.intersections);
        }
      }
    }
  }
}
