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
#include <span>

#include "gcmb/matroid.hpp"
#include "gcmb/weight.hpp"

namespace gcmb {

struct IntersectionStats {
  std::int64_t oracle_calls = 0;
  int augmentations = 0;
};

// Maximum-cardinality common independent set by repeated shortest augmenting
// paths in the exchange graph. Throws UsageError on a ground-set mismatch.
ElementSet max_common_independent(const Matroid& m1, const Matroid& m2,
                                  IntersectionStats* stats = nullptr);

struct WeightedBase {
  BaseSet base;
  Weight weight;
};

// Minimum-weight common base, or nullopt when none exists (including when the
// ranks differ). Augments along cheapest paths, fewest arcs on ties, so the
// set after k augmentations is a minimum-weight common independent k-set.
std::optional<WeightedBase> min_weight_common_base(const Matroid& m1, const Matroid& m2,
                                                   std::span<const Weight> w,
                                                   IntersectionStats* stats = nullptr);

}  // namespace gcmb
