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

#include <filesystem>
#include <iosfwd>

#include "gcmb/group.hpp"
#include "gcmb/matroid.hpp"
#include "gcmb/solver.hpp"
#include "gcmb/weight.hpp"

namespace gcmb {

// Matroid file: first line `matroid <kind>`, then per kind
//   uniform:   n <n> / r <r>
//   graphic:   vertices <v>, then `edge <u> <w>` lines
//   linear:    field <p> / rows <r>, then r lines of n integers
//   explicit:  n <n>, then `base <i1> <i2> ...` lines
//   partition: n <n>, then `class <capacity> <i1> <i2> ...` lines
// `#` starts a comment. Throws ParseError with a line number.
Matroid read_matroid(std::istream& in, bool trust = false);
Matroid read_matroid(const std::filesystem::path& path, bool trust = false);
void write_matroid(std::ostream& out, const Matroid& m);  // as explicit

// `<element-index> <group-element>` per line; every element exactly once.
Labeling read_labeling(std::istream& in, const GroupSpec& group, int n);
Labeling read_labeling(const std::filesystem::path& path, const GroupSpec& group, int n);

// `<element-index> <integer-or-rational>` per line; every element exactly once.
WeightVector read_weights(std::istream& in, int n);
WeightVector read_weights(const std::filesystem::path& path, int n);

}  // namespace gcmb
