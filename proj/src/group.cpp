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

#include "gcmb/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <unordered_map>

#include "gcmb/errors.hpp"

namespace gcmb {
namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; static_cast<std::int64_t>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int base, int exp) {
  int v = 1;
  while (exp-- > 0) v *= base;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'", 0);
  }
  return value;
}

int mod(std::int64_t a, int m) {
  const std::int64_t r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (int m : factors_) order_ *= m;
  if (order_ <= 256) {
    auto table = std::make_shared<std::vector<std::uint16_t>>(
        static_cast<std::size_t>(order_) * order_);
    for (int a = 0; a < order_; ++a) {
      const auto ra = decode(a);
      for (int b = 0; b < order_; ++b) {
        const auto rb = decode(b);
        int c = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          c = c * factors_[i] + (ra[i] + rb[i]) % factors_[i];
        }
        (*table)[static_cast<std::size_t>(a) * order_ + b] = static_cast<std::uint16_t>(c);
      }
    }
    add_table_ = std::move(table);
  }
}

GroupSpec GroupSpec::from_moduli(const std::vector<int>& moduli) {
  std::map<int, std::vector<int>> exponents;
  for (int m : moduli) {
    if (m < 1) throw UsageError("group modulus must be >= 1, got " + std::to_string(m));
    for (auto [p, e] : factorize(m)) exponents[p].push_back(e);
  }
  std::size_t count = 0;
  for (auto& [p, es] : exponents) {
    std::sort(es.begin(), es.end(), std::greater<>());
    count = std::max(count, es.size());
  }
  // factors[0] is the largest invariant factor until the final reverse.
  std::vector<int> factors(count, 1);
  for (const auto& [p, es] : exponents) {
    for (std::size_t i = 0; i < es.size(); ++i) factors[i] *= ipow(p, es[i]);
  }
  std::reverse(factors.begin(), factors.end());
  std::int64_t order = 1;
  for (int m : factors) order *= m;
  if (order > 1 << 20) throw UsageError("group order too large");
  return GroupSpec(std::move(factors));
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<int> moduli;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty group spec", 0);
  while (true) {
    const auto x = rest.find_first_of("xX");
    std::string_view token = trim(rest.substr(0, x));
    if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z')) {
      throw ParseError("malformed group spec '" + std::string(text) + "'", 0);
    }
    const int m = parse_int(token.substr(1), "group modulus");
    if (m < 1) throw ParseError("group modulus must be >= 1 in '" + std::string(text) + "'", 0);
    moduli.push_back(m);
    if (x == std::string_view::npos) break;
    rest = rest.substr(x + 1);
  }
  return from_moduli(moduli);
}

std::string GroupSpec::name() const {
  if (factors_.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(factors_[i]);
  }
  return s;
}

std::vector<int> GroupSpec::decode(int code) const {
  std::vector<int> r(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    r[i] = code % factors_[i];
    code /= factors_[i];
  }
  return r;
}

GroupElement GroupSpec::zero() const {
  return GroupElement(std::vector<int>(factors_.size(), 0), factors_);
}

GroupElement GroupSpec::element(std::vector<int> residues) const {
  if (residues.size() != factors_.size()) {
    throw UsageError("element has " + std::to_string(residues.size()) + " residues, group " +
                     name() + " needs " + std::to_string(factors_.size()));
  }
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = mod(residues[i], factors_[i]);
  return GroupElement(std::move(residues), factors_);
}

GroupElement GroupSpec::from_code(int code) const {
  if (code < 0 || code >= order_) throw UsageError("group element code out of range");
  return GroupElement(decode(code), factors_);
}

int GroupSpec::code(const GroupElement& g) const {
  if (g.moduli() != factors_) throw UsageError("element does not belong to " + name());
  int c = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) c = c * factors_[i] + g.residues()[i];
  return c;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (int c = 0; c < order_; ++c) out.push_back(from_code(c));
  return out;
}

int GroupSpec::add_codes(int a, int b) const {
  if (add_table_) return (*add_table_)[static_cast<std::size_t>(a) * order_ + b];
  const auto ra = decode(a);
  const auto rb = decode(b);
  int c = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c = c * factors_[i] + (ra[i] + rb[i]) % factors_[i];
  }
  return c;
}

int GroupSpec::neg_code(int a) const {
  const auto ra = decode(a);
  int c = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c = c * factors_[i] + (factors_[i] - ra[i]) % factors_[i];
  }
  return c;
}

int GroupSpec::mul_code(std::int64_t n, int a) const {
  const auto ra = decode(a);
  int c = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c = c * factors_[i] + mod((n % factors_[i]) * ra[i], factors_[i]);
  }
  return c;
}

GroupElement GroupSpec::parse_element(std::string_view text) const {
  text = trim(text);
  std::vector<int> residues;
  if (factors_.empty()) {
    if (parse_int(text, "group element") != 0) {
      throw ParseError("trivial group has only the element 0", 0);
    }
    return zero();
  }
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    residues.push_back(parse_int(rest.substr(0, comma), "group element"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (residues.size() != factors_.size()) {
    throw ParseError("element '" + std::string(text) + "' does not match group " + name(), 0);
  }
  return element(std::move(residues));
}

GroupElement::GroupElement(std::vector<int> residues, std::vector<int> moduli)
    : residues_(std::move(residues)), moduli_(std::move(moduli)) {}

bool GroupElement::is_zero() const {
  return std::all_of(residues_.begin(), residues_.end(), [](int r) { return r == 0; });
}

std::string GroupElement::str() const {
  if (residues_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(residues_[i]);
  }
  return s;
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  if (a.moduli() != b.moduli()) throw UsageError("adding elements of different groups");
  std::vector<int> r(a.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = (a.residues()[i] + b.residues()[i]) % a.moduli()[i];
  }
  return GroupElement(std::move(r), a.moduli());
}

GroupElement negate(const GroupElement& a) {
  std::vector<int> r(a.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = (a.moduli()[i] - a.residues()[i]) % a.moduli()[i];
  }
  return GroupElement(std::move(r), a.moduli());
}

GroupElement scalar_mul(std::int64_t n, const GroupElement& g) {
  std::vector<int> r(g.residues().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = mod((n % g.moduli()[i]) * g.residues()[i], g.moduli()[i]);
  }
  return GroupElement(std::move(r), g.moduli());
}

Subgroup::Subgroup(const GroupSpec& parent, std::vector<int> codes)
    : parent_(parent), codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  if (codes_.empty() || codes_.front() != 0) throw UsageError("subgroup must contain 0");
  for (int a : codes_) {
    if (a < 0 || a >= parent_.order()) throw UsageError("subgroup element out of range");
    for (int b : codes_) {
      if (!contains(parent_.add_codes(a, b))) {
        throw UsageError("subset is not closed under addition in " + parent_.name());
      }
    }
  }
}

bool Subgroup::contains(int code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  for (int c : codes_) out.push_back(parent_.from_code(c));
  return out;
}

Subgroup stabilizer(const GroupSpec& spec, const std::vector<int>& subset_codes) {
  std::vector<char> in(spec.order(), 0);
  for (int c : subset_codes) in[c] = 1;
  std::vector<int> stab;
  for (int g = 0; g < spec.order(); ++g) {
    bool fixes = true;
    for (int f = 0; f < spec.order() && fixes; ++f) {
      if (in[f] && !in[spec.add_codes(g, f)]) fixes = false;
    }
    if (fixes) stab.push_back(g);
  }
  return Subgroup(spec, std::move(stab));
}

CosetPartition cosets(const Subgroup& h) {
  const GroupSpec& spec = h.parent();
  CosetPartition out{h, {}, {}, std::vector<int>(spec.order(), -1)};
  for (int g = 0; g < spec.order(); ++g) {
    if (out.coset_of[g] >= 0) continue;
    std::vector<int> coset;
    for (int c : h.codes()) coset.push_back(spec.add_codes(g, c));
    std::sort(coset.begin(), coset.end());
    const int index = static_cast<int>(out.cosets.size());
    for (int c : coset) out.coset_of[c] = index;
    out.representatives.push_back(g);
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

int davenport_lower_bound(const GroupSpec& spec) {
  int m = 1;
  for (int f : spec.invariant_factors()) m += f - 1;
  return m;
}

namespace {

bool is_prime_power(int n) {
  const auto f = factorize(n);
  return f.size() == 1;
}

// Longest zero-sum-free sequence, as a nondecreasing code sequence; memoized
// on (attainable subsequence sums, smallest allowed next code).
class ZeroSumFreeSearch {
 public:
  explicit ZeroSumFreeSearch(const GroupSpec& spec) : spec_(spec) {}

  int longest() { return extend(0, 1); }

 private:
  int extend(std::uint32_t sums, int start) {
    const std::uint64_t key = (static_cast<std::uint64_t>(sums) << 5) | start;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int best = 0;
    for (int c = start; c < spec_.order(); ++c) {
      std::uint32_t next = sums | (1u << c);
      for (int s = 0; s < spec_.order(); ++s) {
        if (sums >> s & 1u) next |= 1u << spec_.add_codes(s, c);
      }
      if (next & 1u) continue;
      best = std::max(best, 1 + extend(next, c));
    }
    memo_.emplace(key, best);
    return best;
  }

  const GroupSpec& spec_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

int davenport(const GroupSpec& spec, DavenportMethod method) {
  const int bound = davenport_lower_bound(spec);
  if (method == DavenportMethod::formula) {
    if (spec.is_trivial() || is_prime_power(spec.order()) ||
        spec.invariant_factors().size() <= 2) {
      return bound;
    }
    throw UsageError("Davenport formula is not known to be exact for " + spec.name() +
                     " (not a p-group, more than two invariant factors)");
  }
  if (spec.order() > 16) {
    throw CapacityError("Davenport brute force is limited to |G| <= 16, got " + spec.name());
  }
  const int d = ZeroSumFreeSearch(spec).longest() + 1;
  if (d > bound + 4 || d > spec.order()) {
    throw InternalError("Davenport search left its sanity window for " + spec.name());
  }
  return d;
}

int davenport(const GroupSpec& spec) {
  try {
    return davenport(spec, DavenportMethod::formula);
  } catch (const UsageError&) {
    return davenport(spec, DavenportMethod::brute_force);
  }
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

ClosenessClass closeness_class(const GroupSpec& spec) {
  const int n = spec.order();
  if (n == 1) return ClosenessClass::proven;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(p) && is_prime(n / p)) return ClosenessClass::proven;
  }
  if (spec.is_cyclic() && is_prime_power(n)) return ClosenessClass::proven;
  return ClosenessClass::unproven;
}

namespace {

void chains(int remaining, int last, std::vector<int>& chain, std::vector<GroupSpec>& out) {
  if (remaining == 1) {
    out.push_back(GroupSpec::from_moduli(chain));
    return;
  }
  for (int m = std::max(2, last); m <= remaining; m += last) {
    if (remaining % m != 0) continue;
    // Every later factor is a multiple of m, so the rest must be divisible by m.
    if ((remaining / m) % m != 0 && remaining / m != 1) continue;
    chain.push_back(m);
    chains(remaining / m, m, chain, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> groups_up_to(int max_order) {
  std::vector<GroupSpec> out;
  out.emplace_back();
  for (int n = 2; n <= max_order; ++n) {
    std::vector<int> chain;
    std::vector<GroupSpec> of_order;
    chains(n, 1, chain, of_order);
    std::sort(of_order.begin(), of_order.end(), [](const GroupSpec& a, const GroupSpec& b) {
      return a.invariant_factors() < b.invariant_factors();
    });
    out.insert(out.end(), of_order.begin(), of_order.end());
  }
  return out;
}

}  // namespace gcmb
