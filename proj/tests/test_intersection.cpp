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

#include "gcmb/errors.hpp"
#include "gcmb/intersection.hpp"
#include "oracles.hpp"

using namespace gcmb;

TEST_CASE("cardinality intersection small cases") {
  const Matroid u24 = make_uniform(4, 2);
  CHECK(max_common_independent(u24, u24).size() == 2);
  const Matroid u36 = make_uniform(6, 3);
  const Matroid p = make_partition({0, 0, 1, 1, 2, 2}, {1, 1, 1});
  const ElementSet x = max_common_independent(u36, p);
  CHECK(x.size() == 3);
  CHECK(oracle::max_common_independent(u36, p) == 3);
  CHECK_THROWS_AS(max_common_independent(u24, u36), UsageError);
}

TEST_CASE("cardinality intersection agrees with brute force") {
  Rng rng = make_rng(1, 0);
  int deficient = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Matroid a = oracle::random_matroid(rng, 7);
    const Matroid b = oracle::random_matroid(rng, a.size(), a.size());
    IntersectionStats stats;
    const ElementSet x = max_common_independent(a, b, &stats);
    CHECK(a.independent(x));
    CHECK(b.independent(x));
    const int best = oracle::max_common_independent(a, b);
    CHECK(x.size() == best);
    if (best < std::min(a.rank(), b.rank())) ++deficient;
    CHECK(stats.augmentations == x.size());
  }
  CHECK(deficient > 0);  // the sample exercises non-trivial cases
}

TEST_CASE("graphic pairs without a common base") {
  Rng rng = make_rng(2, 0);
  int checked = 0;
  while (checked < 100) {
    auto random_graph = [&] {
      std::vector<Edge> edges;
      while (edges.size() < 6) {
        const int u = static_cast<int>(uniform_int(rng, 0, 3));
        const int v = static_cast<int>(uniform_int(rng, 0, 3));
        if (u != v) edges.push_back({u, v});
      }
      return make_graphic(4, edges);
    };
    const Matroid a = random_graph();
    const Matroid b = random_graph();
    ++checked;
    CHECK(max_common_independent(a, b).size() == oracle::max_common_independent(a, b));
  }
}

TEST_CASE("weighted intersection") {
  const Matroid u24 = make_uniform(4, 2);
  const WeightVector w{1, 2, 3, 4};
  const auto r = min_weight_common_base(u24, u24, w);
  REQUIRE(r);
  CHECK(r->base == ElementSet{0, 1});
  CHECK(r->weight == Weight(3));
  CHECK_FALSE(min_weight_common_base(u24, make_uniform(4, 3), w));

  Rng rng = make_rng(3, 0);
  int instances = 0;
  while (instances < 200) {
    const Matroid a = oracle::random_matroid(rng, 8);
    const Matroid b = oracle::random_matroid(rng, a.size(), a.size());
    if (a.rank() != b.rank()) continue;
    ++instances;
    WeightVector wv(a.size());
    for (auto& x : wv) x = Weight(uniform_int(rng, -5, 5));
    const auto got = min_weight_common_base(a, b, wv);
    const auto expected = oracle::min_common_base(a, b, wv);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) {
      CHECK(got->weight == *expected);
      CHECK(a.is_base(got->base));
      CHECK(b.is_base(got->base));
      CHECK(oracle::weight(wv, got->base) == got->weight);
    }
    // Zero weights reduce to the cardinality question.
    const WeightVector zero(a.size(), Weight(0));
    CHECK(min_weight_common_base(a, b, zero).has_value() ==
          (max_common_independent(a, b).size() == a.rank()));
  }
}

TEST_CASE("rational weights") {
  const Matroid u36 = make_uniform(6, 3);
  const WeightVector w{Weight(1, 2), Weight(1, 3), Weight(-7, 4), Weight(2), Weight(0), Weight(5, 6)};
  const auto r = min_weight_common_base(u36, u36, w);
  REQUIRE(r);
  CHECK(r->weight == Weight(1, 3) + Weight(-7, 4) + Weight(0));
  CHECK(parse_weight("7/4") == Weight(7, 4));
  CHECK(parse_weight("-3") == Weight(-3));
  CHECK(format_weight(Weight(-6, 4)) == "-3/2");
  CHECK(format_weight(Weight(4)) == "4");
  CHECK_THROWS_AS(parse_weight("1/0"), ParseError);
  CHECK_THROWS_AS(parse_weight("abc"), ParseError);
}
