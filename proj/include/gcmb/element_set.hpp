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

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gcmb {

inline constexpr int kMaxGroundSize = 64;

// Subset of a matroid ground set {0, ..., n-1}, n <= 64, stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }
  static ElementSet from(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.bits_ |= bit(e);
    return s;
  }
  // {0, ..., n-1}
  static constexpr ElementSet prefix(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(ElementSet other) const { return (bits_ & other.bits_) == 0; }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~bit(e)); }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const ElementSet&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  // "{0,3,5}"
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int e) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    });
    return s + "}";
  }

 private:
  static constexpr std::uint64_t bit(int e) { return std::uint64_t{1} << e; }
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the ascending element sequences.
inline bool lex_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint64_t above = d >= 63 ? 0 : ~((std::uint64_t{2} << d) - 1);
  if (a.contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

// Calls f(ElementSet) on every k-subset of `from`, in lexicographic order.
// f returns false to stop early. Returns false if stopped.
template <typename F>
bool for_each_subset_of_size(ElementSet from, int k, F&& f) {
  const std::vector<int> pool = from.elements();
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ElementSet s;
    for (int i : idx) s = s.with(pool[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All subsets of `from` (including empty and `from` itself), by mask order.
template <typename F>
void for_each_subset(ElementSet from, F&& f) {
  const std::uint64_t m = from.bits();
  std::uint64_t s = 0;
  while (true) {
    f(ElementSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace gcmb
