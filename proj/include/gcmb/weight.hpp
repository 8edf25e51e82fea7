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
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace gcmb {

// Exact element weights; comparisons never go through floating point.
using Weight = boost::rational<std::int64_t>;
using WeightVector = std::vector<Weight>;

// "3", "-2", "7/4". Throws ParseError.
Weight parse_weight(std::string_view text);
std::string format_weight(const Weight& w);

}  // namespace gcmb
