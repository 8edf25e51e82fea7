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

#include "gcmb/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "gcmb/errors.hpp"
#include "gcmb/group.hpp"

namespace gcmb {

std::string to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::uniform: return "uniform";
    case MatroidKind::graphic: return "graphic";
    case MatroidKind::linear: return "linear";
    case MatroidKind::partition: return "partition";
    case MatroidKind::explicit_bases: return "explicit";
    case MatroidKind::minor: return "minor";
    case MatroidKind::dual: return "dual";
  }
  return "unknown";
}

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw UsageError("ground set size must be in [0, 64], got " + std::to_string(n));
  }
}

class UniformOracle final : public detail::Oracle {
 public:
  UniformOracle(int n, int r) : n_(n), r_(r) {}
  int ground_size() const override { return n_; }
  MatroidKind kind() const override { return MatroidKind::uniform; }
  bool independent(ElementSet x) const override { return x.size() <= r_; }

 private:
  int n_, r_;
};

class GraphicOracle final : public detail::Oracle {
 public:
  GraphicOracle(int vertices, std::vector<Edge> edges)
      : vertices_(vertices), edges_(std::move(edges)) {}
  int ground_size() const override { return static_cast<int>(edges_.size()); }
  MatroidKind kind() const override { return MatroidKind::graphic; }

  bool independent(ElementSet x) const override {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    x.for_each([&](int e) {
      if (!acyclic) return;
      const int a = find(edges_[e].u);
      const int b = find(edges_[e].v);
      if (a == b) {
        acyclic = false;
      } else {
        parent[a] = b;
      }
    });
    return acyclic;
  }

 private:
  int vertices_;
  std::vector<Edge> edges_;
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a % p, exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

class LinearOracle final : public detail::Oracle {
 public:
  LinearOracle(int p, std::vector<std::vector<std::int64_t>> columns)
      : p_(p), columns_(std::move(columns)) {}
  int ground_size() const override { return static_cast<int>(columns_.size()); }
  MatroidKind kind() const override { return MatroidKind::linear; }

  bool independent(ElementSet x) const override {
    const int k = x.size();
    if (k == 0) return true;
    const std::size_t rows = columns_.empty() ? 0 : columns_[0].size();
    if (static_cast<std::size_t>(k) > rows) return false;
    // Row-reduce the k selected columns, stored as rows of `m`.
    std::vector<std::vector<std::int64_t>> m;
    m.reserve(k);
    x.for_each([&](int e) { m.push_back(columns_[e]); });
    std::size_t pivot_col = 0;
    for (int i = 0; i < k; ++i) {
      while (pivot_col < rows) {
        int found = -1;
        for (int j = i; j < k; ++j) {
          if (m[j][pivot_col] != 0) {
            found = j;
            break;
          }
        }
        if (found >= 0) {
          std::swap(m[i], m[found]);
          break;
        }
        ++pivot_col;
      }
      if (pivot_col == rows) return false;
      const std::int64_t inv = inverse_mod(m[i][pivot_col], p_);
      for (int j = i + 1; j < k; ++j) {
        const std::int64_t f = m[j][pivot_col] * inv % p_;
        if (f == 0) continue;
        for (std::size_t c = pivot_col; c < rows; ++c) {
          m[j][c] = ((m[j][c] - f * m[i][c]) % p_ + p_) % p_;
        }
      }
      ++pivot_col;
    }
    return true;
  }

 private:
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> columns_;
};

class ExplicitOracle final : public detail::Oracle {
 public:
  ExplicitOracle(int n, std::vector<ElementSet> bases) : n_(n), bases_(std::move(bases)) {
    if (n_ <= 20) {
      table_.assign(std::size_t{1} << n_, 0);
      for (ElementSet b : bases_) table_[b.bits()] = 1;
      for (std::size_t mask = table_.size(); mask-- > 0;) {
        if (!table_[mask]) continue;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
          table_[mask & ~(rest & (~rest + 1))] = 1;
        }
      }
    }
  }
  int ground_size() const override { return n_; }
  MatroidKind kind() const override { return MatroidKind::explicit_bases; }

  bool independent(ElementSet x) const override {
    if (!table_.empty()) return table_[x.bits()] != 0;
    return std::any_of(bases_.begin(), bases_.end(), [&](ElementSet b) { return x.subset_of(b); });
  }

 private:
  int n_;
  std::vector<ElementSet> bases_;
  std::vector<char> table_;
};

class PartitionOracle final : public detail::Oracle {
 public:
  PartitionOracle(std::vector<int> class_of, std::vector<int> capacities)
      : class_of_(std::move(class_of)), capacities_(std::move(capacities)) {}
  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  MatroidKind kind() const override { return MatroidKind::partition; }

  bool independent(ElementSet x) const override {
    std::vector<int> used(capacities_.size(), 0);
    bool ok = true;
    x.for_each([&](int e) {
      if (++used[class_of_[e]] > capacities_[class_of_[e]]) ok = false;
    });
    return ok;
  }

 private:
  std::vector<int> class_of_;
  std::vector<int> capacities_;
};

class MinorOracle final : public detail::Oracle {
 public:
  MinorOracle(Matroid parent, ElementSet contracted, std::vector<int> kept)
      : parent_(std::move(parent)), contracted_(contracted), kept_(std::move(kept)) {}
  int ground_size() const override { return static_cast<int>(kept_.size()); }
  MatroidKind kind() const override { return MatroidKind::minor; }

  bool independent(ElementSet x) const override {
    ElementSet lifted = contracted_;
    x.for_each([&](int e) { lifted = lifted.with(kept_[e]); });
    return parent_.independent(lifted);
  }

 private:
  Matroid parent_;
  ElementSet contracted_;
  std::vector<int> kept_;
};

class DualOracle final : public detail::Oracle {
 public:
  explicit DualOracle(Matroid parent) : parent_(std::move(parent)) {}
  int ground_size() const override { return parent_.size(); }
  MatroidKind kind() const override { return MatroidKind::dual; }

  // X is coindependent iff E \ X still spans.
  bool independent(ElementSet x) const override {
    return parent_.rank(parent_.ground() - x) == parent_.rank();
  }

 private:
  Matroid parent_;
};

class DirectSumOracle final : public detail::Oracle {
 public:
  DirectSumOracle(Matroid a, Matroid b) : a_(std::move(a)), b_(std::move(b)) {}
  int ground_size() const override { return a_.size() + b_.size(); }
  MatroidKind kind() const override { return MatroidKind::explicit_bases; }

  bool independent(ElementSet x) const override {
    const ElementSet low = x & a_.ground();
    const ElementSet high(x.bits() >> a_.size());
    return a_.independent(low) && b_.independent(high);
  }

 private:
  Matroid a_, b_;
};

int greedy_rank(const detail::Oracle& oracle, ElementSet x) {
  ElementSet acc;
  x.for_each([&](int e) {
    if (oracle.independent(acc.with(e))) acc = acc.with(e);
  });
  return acc.size();
}

void reject_loops(const Matroid& m, const char* family) {
  for (int e = 0; e < m.size(); ++e) {
    if (!m.independent(ElementSet{e})) {
      throw UsageError(std::string(family) + " matroid has a loop at element " +
                       std::to_string(e) + "; loopless matroids only");
    }
  }
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const detail::Oracle> oracle)
    : oracle_(std::move(oracle)),
      rank_(greedy_rank(*oracle_, ElementSet::prefix(oracle_->ground_size()))) {}

int Matroid::rank(ElementSet x) const { return greedy_rank(*oracle_, x); }

ElementSet Matroid::extend_to_base(ElementSet independent_set) const {
  ElementSet acc = independent_set;
  for (int e = 0; e < size() && acc.size() < rank_; ++e) {
    if (!acc.contains(e) && independent(acc.with(e))) acc = acc.with(e);
  }
  return acc;
}

Matroid make_uniform(int n, int r) {
  check_ground_size(n);
  if (r < 0 || r > n) throw UsageError("uniform matroid needs 0 <= r <= n");
  Matroid m(std::make_shared<UniformOracle>(n, r));
  reject_loops(m, "uniform");
  return m;
}

Matroid make_graphic(int vertices, const std::vector<Edge>& edges) {
  check_ground_size(static_cast<int>(edges.size()));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      throw UsageError("edge endpoint out of range");
    }
  }
  Matroid m(std::make_shared<GraphicOracle>(vertices, edges));
  reject_loops(m, "graphic");
  return m;
}

Matroid make_linear(int p, const std::vector<std::vector<std::int64_t>>& rows) {
  if (!is_prime(p)) throw UsageError("field size " + std::to_string(p) + " is not prime");
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  check_ground_size(static_cast<int>(n));
  std::vector<std::vector<std::int64_t>> columns(n, std::vector<std::int64_t>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw UsageError("matrix rows have different lengths");
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = ((rows[i][j] % p) + p) % p;
  }
  Matroid m(std::make_shared<LinearOracle>(p, std::move(columns)));
  reject_loops(m, "linear");
  return m;
}

Matroid make_explicit(int n, const std::vector<ElementSet>& bases, bool trust) {
  check_ground_size(n);
  if (bases.empty()) throw UsageError("explicit matroid needs at least one base");
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != r) throw UsageError("explicit bases differ in size: " + b.str());
    if (!b.subset_of(ElementSet::prefix(n))) throw UsageError("base element out of range: " + b.str());
  }
  std::vector<ElementSet> unique = bases;
  std::sort(unique.begin(), unique.end(), LexLess{});
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (!trust && n > 12) {
    throw UsageError("explicit matroids with n > 12 are not validated; pass --trust to accept");
  }
  if (!trust) {
    if (auto bad = find_exchange_violation(unique)) {
      throw UsageError("base list violates the exchange axiom at " + bad->first.str() + ", " +
                       bad->second.str());
    }
  }
  Matroid m(std::make_shared<ExplicitOracle>(n, std::move(unique)));
  reject_loops(m, "explicit");
  return m;
}

Matroid make_partition(const std::vector<int>& class_of, const std::vector<int>& capacities) {
  check_ground_size(static_cast<int>(class_of.size()));
  std::vector<int> sizes(capacities.size(), 0);
  for (int c : class_of) {
    if (c < 0 || c >= static_cast<int>(capacities.size())) {
      throw UsageError("partition class index out of range");
    }
    ++sizes[c];
  }
  for (std::size_t c = 0; c < capacities.size(); ++c) {
    if (capacities[c] < 0 || capacities[c] > sizes[c]) {
      throw UsageError("partition capacity must lie in [0, class size]");
    }
  }
  return Matroid(std::make_shared<PartitionOracle>(class_of, capacities));
}

Minor minor(const Matroid& m, ElementSet contract_set, ElementSet remove) {
  if (!contract_set.disjoint(remove)) throw UsageError("contract and delete sets overlap");
  if (!m.independent(contract_set)) {
    throw UsageError("cannot contract dependent set " + contract_set.str());
  }
  std::vector<int> kept;
  const ElementSet gone = contract_set | remove;
  for (int e = 0; e < m.size(); ++e) {
    if (!gone.contains(e)) kept.push_back(e);
  }
  Matroid result(std::make_shared<MinorOracle>(m, contract_set, kept));
  return Minor{std::move(result), std::move(kept)};
}

Minor delete_elements(const Matroid& m, ElementSet f) { return minor(m, ElementSet{}, f); }

Minor contract(const Matroid& m, ElementSet f) { return minor(m, f, ElementSet{}); }

Matroid dual(const Matroid& m) { return Matroid(std::make_shared<DualOracle>(m)); }

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_ground_size(a.size() + b.size());
  return Matroid(std::make_shared<DirectSumOracle>(a, b));
}

bool has_loop(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e) {
    if (!m.independent(ElementSet{e})) return true;
  }
  return false;
}

bool oracle_equivalent(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 20) throw CapacityError("oracle comparison limited to n <= 20");
  const std::uint64_t count = std::uint64_t{1} << a.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (a.independent(ElementSet(mask)) != b.independent(ElementSet(mask))) return false;
  }
  return true;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > (std::int64_t{1} << 60)) return std::int64_t{1} << 60;
  }
  return c;
}

namespace {

void bases_from(const Matroid& m, int next, ElementSet current, std::vector<BaseSet>& out) {
  if (current.size() == m.rank()) {
    out.push_back(current);
    return;
  }
  const int needed = m.rank() - current.size();
  for (int e = next; e <= m.size() - needed; ++e) {
    const ElementSet grown = current.with(e);
    if (m.independent(grown)) bases_from(m, e + 1, grown, out);
  }
}

}  // namespace

std::vector<BaseSet> enumerate_bases(const Matroid& m, std::int64_t guard) {
  const std::int64_t candidates = binomial(m.size(), m.rank());
  if (candidates > guard) {
    throw CapacityError("base enumeration of C(" + std::to_string(m.size()) + "," +
                        std::to_string(m.rank()) + ") candidates exceeds the guard of " +
                        std::to_string(guard));
  }
  std::vector<BaseSet> out;
  bases_from(m, 0, ElementSet{}, out);
  return out;
}

std::optional<std::string> check_axioms(const Matroid& m) {
  if (m.size() > 10) throw CapacityError("axiom check limited to n <= 10");
  if (!m.independent(ElementSet{})) return "empty set is dependent";
  const std::uint64_t count = std::uint64_t{1} << m.size();
  std::vector<ElementSet> independents;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet x(mask);
    if (!m.independent(x)) continue;
    independents.push_back(x);
    bool hereditary = true;
    x.for_each([&](int e) {
      if (!m.independent(x.without(e))) hereditary = false;
    });
    if (!hereditary) return "heredity fails below " + x.str();
  }
  for (ElementSet x : independents) {
    for (ElementSet y : independents) {
      if (x.size() >= y.size()) continue;
      bool augments = false;
      (y - x).for_each([&](int e) {
        if (!augments && m.independent(x.with(e))) augments = true;
      });
      if (!augments) return "augmentation fails for " + x.str() + " from " + y.str();
    }
  }
  return std::nullopt;
}

std::optional<std::pair<ElementSet, ElementSet>> find_exchange_violation(
    const std::vector<ElementSet>& bases) {
  std::unordered_set<std::uint64_t> lookup;
  for (ElementSet b : bases) lookup.insert(b.bits());
  for (ElementSet a : bases) {
    for (ElementSet b : bases) {
      bool ok = true;
      (a - b).for_each([&](int x) {
        if (!ok) return;
        bool found = false;
        (b - a).for_each([&](int y) {
          if (!found && lookup.count(a.without(x).with(y).bits())) found = true;
        });
        if (!found) ok = false;
      });
      if (!ok) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

}  // namespace gcmb
