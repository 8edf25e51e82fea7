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

#include "gcmb/scan.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "gcmb/errors.hpp"
#include "gcmb/parallel.hpp"

namespace gcmb {

std::string to_string(IsolationPredicate p) {
  return p == IsolationPredicate::block ? "block" : "strong-block";
}

std::string to_string(LabelingReduction r) {
  return r == LabelingReduction::none ? "none" : "translation";
}

IsolationPredicate parse_predicate(const std::string& s) {
  if (s == "block") return IsolationPredicate::block;
  if (s == "strong-block" || s == "strong_block") return IsolationPredicate::strong_block;
  throw ParseError("unknown isolation predicate '" + s + "'", 0);
}

LabelingReduction parse_reduction(const std::string& s) {
  if (s == "none") return LabelingReduction::none;
  if (s == "translation") return LabelingReduction::translation;
  throw ParseError("unknown labeling reduction '" + s + "'", 0);
}

IsolationKernel::IsolationKernel(const Matroid& m, const GroupSpec& group)
    : n_(m.size()), group_(group) {
  if (m.size() != 2 * m.rank()) {
    throw UsageError("isolation scans need n = 2r; got n=" + std::to_string(m.size()) +
                     ", r=" + std::to_string(m.rank()));
  }
  std::vector<std::uint64_t> others;
  for (BaseSet b : enumerate_bases(m)) {
    if (m.is_base(m.ground() - b)) {
      bases_.push_back(b.bits());
    } else {
      others.push_back(b.bits());
    }
  }
  block_count_ = bases_.size();
  bases_.insert(bases_.end(), others.begin(), others.end());
}

std::uint64_t IsolationKernel::labeling_count(LabelingReduction reduction) const {
  const int digits = reduction == LabelingReduction::translation ? std::max(0, n_ - 1) : n_;
  std::uint64_t count = 1;
  for (int i = 0; i < digits; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / group_.order()) {
      throw CapacityError("labeling count overflows 64 bits");
    }
    count *= group_.order();
  }
  return count;
}

std::vector<int> IsolationKernel::decode(std::uint64_t index) const {
  std::vector<int> codes(n_, 0);
  const auto order = static_cast<std::uint64_t>(group_.order());
  for (int e = 0; e < n_ && index > 0; ++e) {
    codes[e] = static_cast<int>(index % order);
    index /= order;
  }
  return codes;
}

bool IsolationKernel::isolating(const std::vector<int>& codes, IsolationPredicate predicate) const {
  const std::size_t considered =
      predicate == IsolationPredicate::strong_block ? block_count_ : bases_.size();
  // Small groups take the stack path.
  int stack_counts[64];
  std::vector<int> heap_counts;
  int* count = stack_counts;
  if (group_.order() > 64) {
    heap_counts.assign(group_.order(), 0);
    count = heap_counts.data();
  } else {
    std::fill(stack_counts, stack_counts + group_.order(), 0);
  }
  int block_labels_stack[128];
  std::vector<int> block_labels_heap;
  int* block_labels = block_labels_stack;
  if (block_count_ > 128) {
    block_labels_heap.resize(block_count_);
    block_labels = block_labels_heap.data();
  }
  for (std::size_t i = 0; i < considered; ++i) {
    int sum = 0;
    for (std::uint64_t b = bases_[i]; b; b &= b - 1) {
      sum = group_.add_codes(sum, codes[std::countr_zero(b)]);
    }
    ++count[sum];
    if (i < block_count_) block_labels[i] = sum;
  }
  for (std::size_t i = 0; i < block_count_; ++i) {
    if (count[block_labels[i]] == 1) return true;
  }
  return false;
}

ScanRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("range must look like a..b, got '" + text + "'", 0);
  try {
    std::size_t used = 0;
    ScanRange r;
    r.begin = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    const std::string tail = text.substr(dots + 2);
    r.end = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("");
    if (r.end < r.begin) throw ParseError("range end precedes begin in '" + text + "'", 0);
    return r;
  } catch (const std::logic_error&) {
    throw ParseError("malformed range '" + text + "'", 0);
  }
}

namespace {

std::string labels_text(const IsolationKernel& kernel, std::uint64_t index,
                        LabelingReduction reduction) {
  (void)reduction;  // representatives already carry label 0 on the last element
  const std::vector<int> codes = kernel.decode(index);
  std::string s;
  for (std::size_t e = 0; e < codes.size(); ++e) {
    if (e) s += '/';
    s += kernel.group().from_code(codes[e]).str();
  }
  return s;
}

ScanRange clamp(const IsolationKernel& kernel, LabelingReduction reduction, ScanRange range) {
  const std::uint64_t total = kernel.labeling_count(reduction);
  if (range.begin > total || range.end > total) {
    throw UsageError("scan range " + std::to_string(range.begin) + ".." +
                     std::to_string(range.end) + " exceeds the " + std::to_string(total) +
                     " labelings of this matroid");
  }
  return range;
}

}  // namespace

MatroidScan scan_serial(const IsolationKernel& kernel, IsolationPredicate predicate,
                        LabelingReduction reduction, ScanRange range) {
  range = clamp(kernel, reduction, range);
  MatroidScan out;
  out.ranges.push_back(range);
  for (std::uint64_t i = range.begin; i < range.end; ++i) {
    ++out.checked;
    if (kernel.isolating(kernel.decode(i), predicate)) {
      ++out.isolating;
      if (!out.first) out.first = i;
    }
  }
  if (out.first) out.first_labels = labels_text(kernel, *out.first, reduction);
  return out;
}

MatroidScan scan_parallel(const IsolationKernel& kernel, IsolationPredicate predicate,
                          LabelingReduction reduction, ScanRange range, int jobs) {
  jobs = resolve_jobs(jobs);
  if (jobs == 1) return scan_serial(kernel, predicate, reduction, range);
  range = clamp(kernel, reduction, range);
  std::uint64_t isolating = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto begin = static_cast<std::int64_t>(range.begin);
  const auto end = static_cast<std::int64_t>(range.end);
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 256) num_threads(jobs) \
    reduction(+ : isolating) reduction(min : first)
#endif
  for (std::int64_t i = begin; i < end; ++i) {
    if (kernel.isolating(kernel.decode(static_cast<std::uint64_t>(i)), predicate)) {
      ++isolating;
      first = std::min(first, static_cast<std::uint64_t>(i));
    }
  }
  MatroidScan out;
  out.ranges.push_back(range);
  out.checked = range.end - range.begin;
  out.isolating = isolating;
  if (isolating > 0) {
    out.first = first;
    out.first_labels = labels_text(kernel, first, reduction);
  }
  return out;
}

ScanReport isolation_scan(const std::vector<ScanEntry>& entries, const ScanConfig& config) {
  ScanReport report;
  report.group = config.group.name();
  report.predicate = config.predicate;
  report.reduction = config.reduction;
  for (const ScanEntry& entry : entries) {
    if (!entry.matroid || entry.matroid->size() != 2 * entry.matroid->rank()) {
      report.rejected.push_back(entry.id);
      continue;
    }
    const IsolationKernel kernel(*entry.matroid, config.group);
    const std::uint64_t total = kernel.labeling_count(config.reduction);
    const ScanRange range = config.range.value_or(ScanRange{0, total});
    if (range.end > total) {
      throw UsageError("scan range end " + std::to_string(range.end) + " exceeds the " +
                       std::to_string(total) + " labelings of " + entry.id);
    }
    if (range.end - range.begin > kScanRangeGuard) {
      throw CapacityError("scan of " + std::to_string(range.end - range.begin) + " labelings for " +
                          entry.id + " exceeds 2^26; shard it with --range");
    }
    MatroidScan scan = scan_parallel(kernel, config.predicate, config.reduction, range, config.jobs);
    scan.matroid_id = entry.id;
    report.matroids.push_back(std::move(scan));
  }
  return report;
}

namespace {

std::string ranges_text(const std::vector<ScanRange>& ranges) {
  std::string s;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ranges[i].begin) + ".." + std::to_string(ranges[i].end);
  }
  return s;
}

std::map<std::string, std::string> fields(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

}  // namespace

void write_scan_report(std::ostream& out, const ScanReport& report) {
  std::uint64_t checked = 0, isolating = 0;
  for (const MatroidScan& m : report.matroids) {
    out << "matroid=" << m.matroid_id << " range=" << ranges_text(m.ranges)
        << " checked=" << m.checked << " isolating=" << m.isolating
        << " verdict=" << (m.isolating ? "isolating" : "none-found")
        << " first=" << (m.first ? std::to_string(*m.first) : "-")
        << " labels=" << (m.first ? m.first_labels : "-") << '\n';
    checked += m.checked;
    isolating += m.isolating;
  }
  for (const std::string& id : report.rejected) {
    out << "matroid=" << id << " verdict=rejected reason=not-a-block-candidate\n";
  }
  out << "summary group=" << report.group << " predicate=" << to_string(report.predicate)
      << " reduction=" << to_string(report.reduction) << " matroids=" << report.matroids.size()
      << " rejected=" << report.rejected.size() << " checked=" << checked
      << " isolating=" << isolating << " verdict=" << (isolating ? "isolating" : "none-found")
      << '\n';
}

ScanReport read_scan_report(std::istream& in) {
  ScanReport report;
  std::string line;
  int line_no = 0;
  bool summary = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto f = fields(line);
    try {
      if (line.rfind("summary", 0) == 0) {
        report.group = f.at("group");
        report.predicate = parse_predicate(f.at("predicate"));
        report.reduction = parse_reduction(f.at("reduction"));
        summary = true;
        continue;
      }
      if (f.at("verdict") == "rejected") {
        report.rejected.push_back(f.at("matroid"));
        continue;
      }
      MatroidScan m;
      m.matroid_id = f.at("matroid");
      std::string ranges = f.at("range");
      std::size_t start = 0;
      while (start <= ranges.size()) {
        const auto comma = ranges.find(',', start);
        m.ranges.push_back(parse_range(ranges.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      m.checked = std::stoull(f.at("checked"));
      m.isolating = std::stoull(f.at("isolating"));
      if (f.at("first") != "-") {
        m.first = std::stoull(f.at("first"));
        m.first_labels = f.at("labels");
      }
      report.matroids.push_back(std::move(m));
    } catch (const std::out_of_range&) {
      throw ParseError("scan report line is missing a field", line_no);
    } catch (const std::invalid_argument&) {
      throw ParseError("scan report line has a malformed number", line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!summary) throw ParseError("scan report has no summary line", line_no);
  return report;
}

ScanReport merge_scan_reports(const std::vector<ScanReport>& shards) {
  if (shards.empty()) throw UsageError("nothing to merge");
  ScanReport merged;
  merged.group = shards.front().group;
  merged.predicate = shards.front().predicate;
  merged.reduction = shards.front().reduction;
  std::map<std::string, std::size_t> slot;
  for (const ScanReport& shard : shards) {
    if (shard.group != merged.group || shard.predicate != merged.predicate ||
        shard.reduction != merged.reduction) {
      throw UsageError("cannot merge scan reports with different group/predicate/reduction");
    }
    for (const MatroidScan& m : shard.matroids) {
      auto [it, inserted] = slot.emplace(m.matroid_id, merged.matroids.size());
      if (inserted) {
        merged.matroids.push_back(m);
        continue;
      }
      MatroidScan& acc = merged.matroids[it->second];
      for (const ScanRange& r : m.ranges) {
        for (const ScanRange& have : acc.ranges) {
          if (r.begin < have.end && have.begin < r.end) {
            throw UsageError("overlapping shard ranges for matroid " + m.matroid_id);
          }
        }
        acc.ranges.push_back(r);
      }
      acc.checked += m.checked;
      acc.isolating += m.isolating;
      if (m.first && (!acc.first || *m.first < *acc.first)) {
        acc.first = m.first;
        acc.first_labels = m.first_labels;
      }
    }
    for (const std::string& id : shard.rejected) {
      if (std::find(merged.rejected.begin(), merged.rejected.end(), id) == merged.rejected.end()) {
        merged.rejected.push_back(id);
      }
    }
  }
  for (MatroidScan& m : merged.matroids) {
    std::sort(m.ranges.begin(), m.ranges.end(),
              [](const ScanRange& a, const ScanRange& b) { return a.begin < b.begin; });
    std::vector<ScanRange> joined;
    for (const ScanRange& r : m.ranges) {
      if (r.begin == r.end) continue;
      if (!joined.empty() && joined.back().end == r.begin) {
        joined.back().end = r.end;
      } else {
        joined.push_back(r);
      }
    }
    if (joined.empty()) joined.push_back(m.ranges.front());
    m.ranges = std::move(joined);
  }
  return merged;
}

}  // namespace gcmb
