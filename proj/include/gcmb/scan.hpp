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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcmb/group.hpp"
#include "gcmb/matroid.hpp"

namespace gcmb {

enum class IsolationPredicate { block, strong_block };
enum class LabelingReduction { none, translation };

std::string to_string(IsolationPredicate p);   // "block" / "strong-block"
std::string to_string(LabelingReduction r);    // "none" / "translation"
IsolationPredicate parse_predicate(const std::string& s);
LabelingReduction parse_reduction(const std::string& s);

// Exhaustive labeling scans refuse index ranges longer than this; longer
// scans are sharded with explicit ranges.
inline constexpr std::uint64_t kScanRangeGuard = std::uint64_t{1} << 26;

// Labeling index i assigns element e the group code given by digit e of i in
// base |G| (element 0 least significant). Under translation reduction only
// labelings with the last element labelled 0 are visited: adding h to every
// label shifts every base label by r*h, a bijection of G, so both predicates
// are constant on translation orbits.
class IsolationKernel {
 public:
  // Throws UsageError unless n = 2r.
  IsolationKernel(const Matroid& m, const GroupSpec& group);

  int size() const { return n_; }
  const GroupSpec& group() const { return group_; }
  std::size_t base_count() const { return bases_.size(); }
  std::size_t block_count() const { return block_count_; }

  // Number of labelings indexed under `reduction`: |G|^n or |G|^(n-1).
  std::uint64_t labeling_count(LabelingReduction reduction) const;
  std::vector<int> decode(std::uint64_t index) const;

  bool isolating(const std::vector<int>& codes, IsolationPredicate predicate) const;

 private:
  int n_;
  GroupSpec group_;
  std::vector<std::uint64_t> bases_;  // blocks first
  std::size_t block_count_ = 0;
};

struct ScanRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;  // exclusive
};

// "a..b" (b exclusive). Throws ParseError.
ScanRange parse_range(const std::string& text);

struct MatroidScan {
  std::string matroid_id;
  std::vector<ScanRange> ranges;  // disjoint, ascending
  std::uint64_t checked = 0;
  std::uint64_t isolating = 0;
  std::optional<std::uint64_t> first;  // smallest isolating labeling index
  std::string first_labels;            // its labels, '/'-joined
};

// Serial reference kernel.
MatroidScan scan_serial(const IsolationKernel& kernel, IsolationPredicate predicate,
                        LabelingReduction reduction, ScanRange range);
// OpenMP kernel; identical result for any jobs.
MatroidScan scan_parallel(const IsolationKernel& kernel, IsolationPredicate predicate,
                          LabelingReduction reduction, ScanRange range, int jobs);

struct ScanEntry {
  std::string id;
  std::optional<Matroid> matroid;  // empty: not a loopless matroid, rejected
};

struct ScanConfig {
  GroupSpec group;
  IsolationPredicate predicate = IsolationPredicate::strong_block;
  LabelingReduction reduction = LabelingReduction::none;
  std::optional<ScanRange> range;  // default: everything, subject to the guard
  int jobs = 1;
};

struct ScanReport {
  std::string group;
  IsolationPredicate predicate = IsolationPredicate::strong_block;
  LabelingReduction reduction = LabelingReduction::none;
  std::vector<MatroidScan> matroids;
  // Labelings of rejected entries are never scanned; they are listed here.
  std::vector<std::string> rejected;
};

// Entries without a matroid or failing the n = 2r filter are rejected, not scanned.
ScanReport isolation_scan(const std::vector<ScanEntry>& entries, const ScanConfig& config);

// One line per matroid plus a summary line. Counterexample labelings are
// written as '/'-joined element labels.
void write_scan_report(std::ostream& out, const ScanReport& report);
ScanReport read_scan_report(std::istream& in);
// Combines shard reports; throws UsageError on overlapping ranges or
// mismatched scan settings.
ScanReport merge_scan_reports(const std::vector<ScanReport>& shards);

}  // namespace gcmb
