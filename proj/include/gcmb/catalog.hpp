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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcmb/matroid.hpp"
#include "gcmb/solver.hpp"

namespace gcmb {

// Catalog line: `<id> <n> <r> <base>;<base>;...`, each base comma-joined
// indices. Blank lines and `#` comments are ignored.
struct CatalogEntry {
  std::string id;
  int n = 0;
  int r = 0;
  std::vector<ElementSet> bases;

  // Every element lies in some base.
  bool loopless() const;
  // Explicit matroid; throws UsageError for entries with loops.
  Matroid matroid() const;
};

struct CatalogDiagnostic {
  int line = 0;
  std::string message;
};

struct LoadOptions {
  // Skip invalid entries instead of throwing; skipped lines are reported
  // through `diagnostics`.
  bool lenient = false;
  std::vector<CatalogDiagnostic>* diagnostics = nullptr;
};

// Entries in file order. Throws ParseError (with line number) on malformed
// lines and on exchange-axiom violations, which name the entry and the
// offending base pair.
std::vector<CatalogEntry> load_catalog(std::istream& in, const LoadOptions& options = {});
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path,
                                       const LoadOptions& options = {});
// Streaming variant; `f` returns false to stop.
void for_each_catalog_entry(std::istream& in, const LoadOptions& options,
                            const std::function<bool(CatalogEntry&&)>& f);

void write_catalog_entry(std::ostream& out, const CatalogEntry& entry);
CatalogEntry catalog_entry(const std::string& id, const Matroid& m);

// Revlex basis-indicator import. Each non-comment line is `[id] n r chars`
// where chars has C(n, r) characters from {0, 1, *} ('*' and '1' mark bases).
// Position i is the i-th r-subset in reverse-lexicographic order: subsets are
// compared by their largest element first, which is ascending bitmask order.
// Lines without an id get `<prefix><line number>`.
std::vector<CatalogEntry> import_revlex(std::istream& in, const std::string& id_prefix = "m",
                                        const LoadOptions& options = {});
// Inverse of import_revlex for one entry.
std::string revlex_string(const CatalogEntry& entry);

// Keeps entries with n = 2r, no loops, and two disjoint bases.
std::vector<CatalogEntry> filter_blocks(const std::vector<CatalogEntry>& entries);

struct BuiltinInstance {
  std::string name;
  Matroid matroid;
  std::optional<Labeling> labeling;  // default labeling, when the instance has one
};

// U_{m-1, 2(m-1)} over Z_m with the first block labelled 1 and the second 0.
BuiltinInstance tight_example(int m);
// M(K4) with edges 01, 02, 03, 12, 13, 23 and labels 0,1,2,0,1,2 over Z_3.
BuiltinInstance k4_instance();
BuiltinInstance uniform_instance(int n, int r);
// "tight:<m>", "k4", "uniform:<n>,<r>", or any bundled matroid name.
// Throws UsageError for unknown names.
BuiltinInstance builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// Small matroids (n <= 8, r <= 4) used as the default test population.
std::vector<NamedMatroid> bundled_matroids();

}  // namespace gcmb
