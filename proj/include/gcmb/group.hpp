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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gcmb {

class GroupElement;

// Finite abelian group Z_{m_1} x ... x Z_{m_r} in invariant-factor form
// (m_1 | m_2 | ... | m_r, each >= 2; no factors = trivial group).
//
// Elements are also addressed by an integer code in [0, order): the mixed
// radix value of the residue vector with the first factor most significant,
// so code order coincides with lexicographic residue order.
class GroupSpec {
 public:
  GroupSpec() = default;  // trivial group

  // Accepts any list of moduli >= 1 and canonicalizes via the Chinese
  // remainder theorem, e.g. {2, 3} -> {6}, {4, 2} -> {2, 4}.
  static GroupSpec from_moduli(const std::vector<int>& moduli);
  // "Z4", "z2xZ6", "Z2xZ3" (-> Z6). Throws ParseError.
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& invariant_factors() const { return factors_; }
  int order() const { return order_; }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  std::string name() const;  // "Z2xZ6", "Z1" for the trivial group

  GroupElement zero() const;
  GroupElement element(std::vector<int> residues) const;  // reduces mod m_i
  GroupElement from_code(int code) const;
  int code(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;  // in code order

  // Code-level arithmetic for hot loops.
  int add_codes(int a, int b) const;
  int neg_code(int a) const;
  int mul_code(std::int64_t n, int a) const;

  // "1,3" or "2" for cyclic groups. Throws ParseError on malformed text or
  // a residue count mismatch.
  GroupElement parse_element(std::string_view text) const;

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

 private:
  explicit GroupSpec(std::vector<int> factors);
  std::vector<int> decode(int code) const;

  std::vector<int> factors_;
  int order_ = 1;
  std::shared_ptr<const std::vector<std::uint16_t>> add_table_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::vector<int> residues, std::vector<int> moduli);

  const std::vector<int>& residues() const { return residues_; }
  const std::vector<int>& moduli() const { return moduli_; }
  bool is_zero() const;
  std::string str() const;  // group_core serialization

  bool operator==(const GroupElement& o) const = default;
  auto operator<=>(const GroupElement& o) const { return residues_ <=> o.residues_; }

 private:
  std::vector<int> residues_;
  std::vector<int> moduli_;
};

// Componentwise sum; throws UsageError when the elements belong to different groups.
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
// n-fold sum of g.
GroupElement scalar_mul(std::int64_t n, const GroupElement& g);

class Subgroup {
 public:
  Subgroup() : codes_{0} {}  // {0} in the trivial group
  // Throws UsageError unless `codes` contains 0 and is closed under addition.
  Subgroup(const GroupSpec& parent, std::vector<int> codes);

  const GroupSpec& parent() const { return parent_; }
  const std::vector<int>& codes() const { return codes_; }  // sorted
  int order() const { return static_cast<int>(codes_.size()); }
  bool contains(int code) const;
  std::vector<GroupElement> elements() const;

 private:
  GroupSpec parent_;
  std::vector<int> codes_;
};

struct CosetPartition {
  Subgroup subgroup;  // H
  std::vector<std::vector<int>> cosets;  // codes, each sorted; ordered by representative
  std::vector<int> representatives;      // smallest code of each coset
  std::vector<int> coset_of;             // code -> coset index
};

Subgroup stabilizer(const GroupSpec& spec, const std::vector<int>& subset_codes);
CosetPartition cosets(const Subgroup& h);

enum class DavenportMethod { formula, brute_force };

// M(G) = sum (m_i - 1) + 1.
int davenport_lower_bound(const GroupSpec& spec);
// Formula mode throws UsageError outside p-groups and groups with at most two
// invariant factors. Brute force requires order <= 16.
int davenport(const GroupSpec& spec, DavenportMethod method);
// D(G) by the formula when it is valid, else by brute force.
int davenport(const GroupSpec& spec);

enum class ClosenessClass { proven, unproven };

// proven iff |G| is a product of two primes or G is cyclic of prime-power order.
ClosenessClass closeness_class(const GroupSpec& spec);

bool is_prime(std::int64_t n);
// Every abelian group of order <= max_order in invariant-factor form, by order then factors.
std::vector<GroupSpec> groups_up_to(int max_order);

}  // namespace gcmb
