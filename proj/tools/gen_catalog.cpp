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

// Regenerates the bundled catalog data under data/.
//
//   rank3_n6.cat     every rank-3 matroid on 6 elements up to isomorphism,
//                    found by exhaustive search over families of 3-subsets
//   rank4_n8.revlex  a seeded sample of rank-4 matroids on 8 elements
//                    (sparse paving, linear over small fields, graphic,
//                    direct sums), deduplicated up to isomorphism
//
// Usage: gcmb_gen_catalog <out-dir> [seed]

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gcmb/catalog.hpp"
#include "gcmb/matroid.hpp"
#include "gcmb/random.hpp"

namespace {

using gcmb::ElementSet;
using u128 = unsigned __int128;

// r-subsets of n in ascending mask order, with an index lookup.
struct SubsetTable {
  int n, r;
  std::vector<std::uint32_t> masks;
  std::vector<int> index;  // mask -> position or -1

  SubsetTable(int n_, int r_) : n(n_), r(r_), index(1u << n_, -1) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (std::popcount(m) == r) {
        index[m] = static_cast<int>(masks.size());
        masks.push_back(m);
      }
    }
  }
};

// perm_images[p][i] = position of the image of subset i under permutation p.
std::vector<std::vector<std::uint8_t>> permutation_images(const SubsetTable& t) {
  std::vector<int> perm(t.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint8_t>> out;
  do {
    std::vector<std::uint8_t> img(t.masks.size());
    for (std::size_t i = 0; i < t.masks.size(); ++i) {
      std::uint32_t image = 0;
      for (int e = 0; e < t.n; ++e) {
        if (t.masks[i] >> e & 1) image |= 1u << perm[e];
      }
      img[i] = static_cast<std::uint8_t>(t.index[image]);
    }
    out.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

u128 canonical(u128 family, const std::vector<std::vector<std::uint8_t>>& images) {
  u128 best = ~u128{0};
  std::vector<int> members;
  for (int i = 0; i < 128; ++i) {
    if (family >> i & 1) members.push_back(i);
  }
  for (const auto& img : images) {
    u128 x = 0;
    for (int i : members) x |= u128{1} << img[i];
    best = std::min(best, x);
  }
  return best;
}

std::vector<ElementSet> bases_of(u128 family, const SubsetTable& t) {
  std::vector<ElementSet> out;
  for (std::size_t i = 0; i < t.masks.size(); ++i) {
    if (family >> i & 1) out.push_back(ElementSet(t.masks[i]));
  }
  return out;
}

// Symmetric exchange check on a family of equal-size sets.
bool is_matroid(u128 family, const SubsetTable& t) {
  if (family == 0) return false;
  std::vector<std::uint32_t> b;
  for (std::size_t i = 0; i < t.masks.size(); ++i) {
    if (family >> i & 1) b.push_back(t.masks[i]);
  }
  for (std::uint32_t x : b) {
    for (std::uint32_t y : b) {
      for (std::uint32_t d = x & ~y; d; d &= d - 1) {
        const std::uint32_t a = d & (~d + 1);
        bool ok = false;
        for (std::uint32_t e = y & ~x; e && !ok; e &= e - 1) {
          const std::uint32_t c = e & (~e + 1);
          ok = family >> t.index[(x & ~a) | c] & 1;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

u128 family_of(const gcmb::Matroid& m, const SubsetTable& t) {
  u128 f = 0;
  for (ElementSet b : gcmb::enumerate_bases(m)) f |= u128{1} << t.index[b.bits()];
  return f;
}

void rank3_n6(const std::filesystem::path& dir) {
  const SubsetTable t(6, 3);
  const auto images = permutation_images(t);
  std::set<u128> seen;
  for (std::uint32_t f = 1; f < (1u << t.masks.size()); ++f) {
    if (!is_matroid(f, t)) continue;
    seen.insert(canonical(f, images));
  }
  std::ofstream out(dir / "rank3_n6.cat");
  out << "# All rank-3 matroids on 6 elements up to isomorphism (" << seen.size() << ").\n"
      << "# Format: <id> <n> <r> <base>;<base>;... with bases as comma-joined indices.\n";
  int id = 0;
  for (u128 f : seen) {
    char name[16];
    std::snprintf(name, sizeof name, "r3n6_%02d", id++);
    gcmb::write_catalog_entry(out, {name, 6, 3, bases_of(f, t)});
  }
  std::cout << "rank3_n6.cat: " << seen.size() << " matroids\n";
}

void rank4_n8(const std::filesystem::path& dir, std::uint64_t seed) {
  const SubsetTable t(8, 4);
  const auto images = permutation_images(t);
  std::set<u128> seen;
  std::vector<std::pair<u128, std::string>> kept;
  auto offer = [&](u128 f, const std::string& family) {
    if (!is_matroid(f, t)) return;
    if (seen.insert(canonical(f, images)).second) kept.push_back({f, family});
  };
  auto rng = gcmb::make_rng(seed, 0);
  const u128 all = (u128{1} << t.masks.size()) - 1;

  // Sparse paving: circuit-hyperplanes pairwise meeting in at most two elements.
  for (int trial = 0; trial < 4000; ++trial) {
    const int target = gcmb::uniform_int(rng, 0, 14);
    std::vector<std::uint32_t> chosen;
    for (int attempt = 0; attempt < 200 && static_cast<int>(chosen.size()) < target; ++attempt) {
      const std::uint32_t c = t.masks[gcmb::uniform_int(rng, 0, 69)];
      const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                    [&](std::uint32_t d) { return std::popcount(c & d) <= 2; });
      if (fits) chosen.push_back(c);
    }
    u128 f = all;
    for (std::uint32_t c : chosen) f &= ~(u128{1} << t.index[c]);
    offer(f, "sparse-paving");
  }
  // Linear over small prime fields.
  for (int p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 1500; ++trial) {
      std::vector<std::vector<std::int64_t>> rows(4, std::vector<std::int64_t>(8));
      const int zero_bias = gcmb::uniform_int(rng, 0, 3);
      for (auto& row : rows) {
        for (auto& v : row) {
          v = gcmb::uniform_int(rng, 0, 3) < zero_bias ? 0 : gcmb::uniform_int(rng, 0, p - 1);
        }
      }
      try {
        const gcmb::Matroid m = gcmb::make_linear(p, rows);
        if (m.rank() == 4) offer(family_of(m, t), "GF(" + std::to_string(p) + ")");
      } catch (const std::exception&) {
        // loops are rejected by the factory; skip those samples
      }
    }
  }
  // Graphic: 8 edges on 5 vertices, parallel edges allowed.
  for (int trial = 0; trial < 1500; ++trial) {
    std::vector<gcmb::Edge> edges;
    while (edges.size() < 8) {
      const int u = gcmb::uniform_int(rng, 0, 4);
      const int v = gcmb::uniform_int(rng, 0, 4);
      if (u != v) edges.push_back({u, v});
    }
    try {
      const gcmb::Matroid m = gcmb::make_graphic(5, edges);
      if (m.rank() == 4) offer(family_of(m, t), "graphic");
    } catch (const std::exception&) {
    }
  }
  // Direct sums of small uniform matroids.
  for (const std::array<int, 4>& q : std::vector<std::array<int, 4>>{
           {2, 1, 6, 3}, {4, 2, 4, 2}, {3, 1, 5, 3}, {3, 2, 5, 2}, {4, 1, 4, 3}, {5, 2, 3, 2}}) {
    offer(family_of(gcmb::direct_sum(gcmb::make_uniform(q[0], q[1]), gcmb::make_uniform(q[2], q[3])), t),
          "direct-sum");
  }

  std::sort(kept.begin(), kept.end(),
            [&](const auto& x, const auto& y) { return x.first < y.first; });
  std::ofstream out(dir / "rank4_n8.revlex");
  out << "# Seeded sample of rank-4 matroids on 8 elements up to isomorphism (seed " << seed
      << ", " << kept.size() << " entries).\n"
      << "# Format: <id> <n> <r> <indicator>; the indicator has one character per\n"
      << "# 4-subset in reverse-lexicographic order, '*' for a base and '0' otherwise.\n";
  int id = 0;
  for (const auto& [f, family] : kept) {
    char name[16];
    std::snprintf(name, sizeof name, "r4n8_%03d", id++);
    gcmb::CatalogEntry e{name, 8, 4, bases_of(f, t)};
    out << e.id << " 8 4 " << gcmb::revlex_string(e) << "  # " << family << '\n';
  }
  std::cout << "rank4_n8.revlex: " << kept.size() << " matroids\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gcmb_gen_catalog <out-dir> [seed]\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 2026;
  std::filesystem::create_directories(dir);
  rank3_n6(dir);
  rank4_n8(dir, seed);
  return 0;
}
