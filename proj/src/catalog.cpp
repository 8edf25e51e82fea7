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

#include "gcmb/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gcmb/errors.hpp"
#include "gcmb/exchange.hpp"

namespace gcmb {

bool CatalogEntry::loopless() const {
  ElementSet covered;
  for (ElementSet b : bases) covered = covered | b;
  return covered == ElementSet::prefix(n);
}

Matroid CatalogEntry::matroid() const { return make_explicit(n, bases, /*trust=*/true); }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::logic_error&) {
    throw ParseError("expected integer " + what + ", got '" + token + "'", 0);
  }
  if (used != token.size()) throw ParseError("expected integer " + what + ", got '" + token + "'", 0);
  return v;
}

void check_dimensions(int n, int r) {
  if (n < 0 || n > kMaxGroundSize) {
    throw ParseError("ground size " + std::to_string(n) + " outside [0, 64]", 0);
  }
  if (r < 0 || r > n) throw ParseError("rank " + std::to_string(r) + " outside [0, n]", 0);
}

// Shared validation: sizes, duplicates, exchange axiom.
void validate(CatalogEntry& e) {
  if (e.bases.empty()) throw ParseError("entry " + e.id + " has no bases", 0);
  for (ElementSet b : e.bases) {
    if (b.size() != e.r) {
      throw ParseError("entry " + e.id + ": base " + b.str() + " has size " +
                           std::to_string(b.size()) + ", expected " + std::to_string(e.r),
                       0);
    }
  }
  std::sort(e.bases.begin(), e.bases.end(), LexLess{});
  if (std::adjacent_find(e.bases.begin(), e.bases.end()) != e.bases.end()) {
    throw ParseError("entry " + e.id + " lists a base twice", 0);
  }
  if (auto bad = find_exchange_violation(e.bases)) {
    throw ParseError("entry " + e.id + " violates base exchange at A=" + bad->first.str() +
                         " B=" + bad->second.str(),
                     0);
  }
}

CatalogEntry parse_catalog_line(const std::string& text) {
  std::istringstream in(text);
  CatalogEntry e;
  std::string n_tok, r_tok, bases_tok;
  if (!(in >> e.id >> n_tok >> r_tok)) throw ParseError("expected `<id> <n> <r> <bases>`", 0);
  e.n = parse_int(n_tok, "n");
  e.r = parse_int(r_tok, "r");
  check_dimensions(e.n, e.r);
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  if (rest.empty()) throw ParseError("entry " + e.id + " has no bases", 0);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto semi = rest.find(';', start);
    const std::string chunk = trim(rest.substr(start, semi - start));
    ElementSet b;
    if (!chunk.empty()) {
      std::size_t s = 0;
      while (s <= chunk.size()) {
        const auto comma = chunk.find(',', s);
        const int v = parse_int(trim(chunk.substr(s, comma - s)), "element");
        if (v < 0 || v >= e.n) {
          throw ParseError("entry " + e.id + ": element " + std::to_string(v) + " outside [0, " +
                               std::to_string(e.n) + ")",
                           0);
        }
        if (b.contains(v)) throw ParseError("entry " + e.id + ": repeated element in a base", 0);
        b = b.with(v);
        if (comma == std::string::npos) break;
        s = comma + 1;
      }
    }
    e.bases.push_back(b);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  validate(e);
  return e;
}

template <class Parse>
void stream_lines(std::istream& in, const LoadOptions& options, Parse parse,
                  const std::function<bool(CatalogEntry&&)>& f) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = strip_comment(line);
    if (text.empty()) continue;
    CatalogEntry entry;
    try {
      entry = parse(text, line_no);
    } catch (const ParseError& err) {
      if (!options.lenient) throw ParseError(err.what(), line_no);
      if (options.diagnostics) options.diagnostics->push_back({line_no, err.what()});
      continue;
    } catch (const UsageError& err) {
      if (!options.lenient) throw ParseError(err.what(), line_no);
      if (options.diagnostics) options.diagnostics->push_back({line_no, err.what()});
      continue;
    }
    if (!f(std::move(entry))) return;
  }
}

}  // namespace

void for_each_catalog_entry(std::istream& in, const LoadOptions& options,
                            const std::function<bool(CatalogEntry&&)>& f) {
  stream_lines(
      in, options, [](const std::string& text, int) { return parse_catalog_line(text); }, f);
}

std::vector<CatalogEntry> load_catalog(std::istream& in, const LoadOptions& options) {
  std::vector<CatalogEntry> out;
  for_each_catalog_entry(in, options, [&](CatalogEntry&& e) {
    out.push_back(std::move(e));
    return true;
  });
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path,
                                       const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open catalog " + path.string());
  return load_catalog(in, options);
}

void write_catalog_entry(std::ostream& out, const CatalogEntry& entry) {
  out << entry.id << ' ' << entry.n << ' ' << entry.r << ' ';
  for (std::size_t i = 0; i < entry.bases.size(); ++i) {
    if (i) out << ';';
    bool first = true;
    entry.bases[i].for_each([&](int e) {
      if (!first) out << ',';
      out << e;
      first = false;
    });
  }
  out << '\n';
}

CatalogEntry catalog_entry(const std::string& id, const Matroid& m) {
  CatalogEntry e;
  e.id = id;
  e.n = m.size();
  e.r = m.rank();
  e.bases = enumerate_bases(m);
  return e;
}

namespace {

// r-subsets of {0..n-1} in ascending bitmask order (Gosper's hack).
template <class F>
void for_each_revlex(int n, int r, F f) {
  if (r == 0) {
    f(ElementSet{});
    return;
  }
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  std::uint64_t x = (r == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
  while (true) {
    f(ElementSet(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t rr = x + c;
    if (rr == 0) return;  // wrapped past 2^64
    x = (((rr ^ x) >> 2) / c) | rr;
    if (limit != 0 && x >= limit) return;
  }
}

}  // namespace

std::vector<CatalogEntry> import_revlex(std::istream& in, const std::string& id_prefix,
                                        const LoadOptions& options) {
  std::vector<CatalogEntry> out;
  auto parse = [&](const std::string& text, int line_no) {
    std::istringstream ls(text);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.size() != 3 && tokens.size() != 4) {
      throw ParseError("expected `[id] n r indicator`", 0);
    }
    CatalogEntry e;
    std::size_t at = 0;
    e.id = tokens.size() == 4 ? tokens[at++] : id_prefix + std::to_string(line_no);
    e.n = parse_int(tokens[at++], "n");
    e.r = parse_int(tokens[at++], "r");
    check_dimensions(e.n, e.r);
    const std::string& chars = tokens[at];
    const std::int64_t expected = binomial(e.n, e.r);
    if (static_cast<std::int64_t>(chars.size()) != expected) {
      throw ParseError("entry " + e.id + ": indicator has " + std::to_string(chars.size()) +
                           " characters, expected C(" + std::to_string(e.n) + "," +
                           std::to_string(e.r) + ") = " + std::to_string(expected),
                       0);
    }
    std::size_t i = 0;
    for_each_revlex(e.n, e.r, [&](ElementSet s) {
      const char c = chars[i++];
      if (c == '*' || c == '1') {
        e.bases.push_back(s);
      } else if (c != '0') {
        throw ParseError("entry " + e.id + ": bad indicator character '" + std::string(1, c) + "'",
                         0);
      }
    });
    validate(e);
    return e;
  };
  stream_lines(in, options, parse, [&](CatalogEntry&& e) {
    out.push_back(std::move(e));
    return true;
  });
  return out;
}

std::string revlex_string(const CatalogEntry& entry) {
  std::vector<ElementSet> sorted = entry.bases;
  std::sort(sorted.begin(), sorted.end(),
            [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
  std::string s;
  std::size_t j = 0;
  for_each_revlex(entry.n, entry.r, [&](ElementSet x) {
    const bool base = j < sorted.size() && sorted[j] == x;
    if (base) ++j;
    s += base ? '*' : '0';
  });
  return s;
}

std::vector<CatalogEntry> filter_blocks(const std::vector<CatalogEntry>& entries) {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : entries) {
    if (e.n != 2 * e.r || !e.loopless()) continue;
    if (find_blocks(e.matroid())) out.push_back(e);
  }
  return out;
}

BuiltinInstance tight_example(int m) {
  if (m < 2) throw UsageError("tight_example needs m >= 2");
  const int r = m - 1;
  const GroupSpec group = GroupSpec::from_moduli({m});
  std::vector<int> codes(2 * r, 0);
  std::fill(codes.begin(), codes.begin() + r, 1);
  return {"tight:" + std::to_string(m), make_uniform(2 * r, r), Labeling(group, codes)};
}

BuiltinInstance k4_instance() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return {"k4", make_graphic(4, edges), Labeling(GroupSpec::from_moduli({3}), {0, 1, 2, 0, 1, 2})};
}

BuiltinInstance uniform_instance(int n, int r) {
  return {"uniform:" + std::to_string(n) + "," + std::to_string(r), make_uniform(n, r),
          std::nullopt};
}

std::vector<NamedMatroid> bundled_matroids() {
  std::vector<NamedMatroid> out;
  out.push_back({"U1,2", make_uniform(2, 1)});
  out.push_back({"U2,3", make_uniform(3, 2)});
  out.push_back({"U2,4", make_uniform(4, 2)});
  out.push_back({"U3,5", make_uniform(5, 3)});
  out.push_back({"U3,6", make_uniform(6, 3)});
  out.push_back({"U4,8", make_uniform(8, 4)});
  out.push_back({"K4", k4_instance().matroid});
  out.push_back({"Fano", make_linear(2, {{1, 0, 0, 1, 1, 0, 1},
                                         {0, 1, 0, 1, 0, 1, 1},
                                         {0, 0, 1, 0, 1, 1, 1}})});
  out.push_back({"C4+chord", make_graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})});
  out.push_back({"P(3,3;1,2)", make_partition({0, 0, 0, 1, 1, 1}, {1, 2})});
  out.push_back({"GF3", make_linear(3, {{1, 0, 0, 1, 1, 1},
                                        {0, 1, 0, 1, 2, 0},
                                        {0, 0, 1, 1, 0, 2}})});
  out.push_back({"U1,2+U2,4", direct_sum(make_uniform(2, 1), make_uniform(4, 2))});
  out.push_back({"AG(3,2)", make_linear(2, {{1, 1, 1, 1, 1, 1, 1, 1},
                                            {0, 1, 0, 0, 1, 1, 0, 1},
                                            {0, 0, 1, 0, 1, 0, 1, 1},
                                            {0, 0, 0, 1, 0, 1, 1, 1}})});
  return out;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"tight:<m>", "k4", "uniform:<n>,<r>"};
  for (const NamedMatroid& m : bundled_matroids()) names.push_back(m.name);
  return names;
}

BuiltinInstance builtin_instance(const std::string& name) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("bad builtin instance '" + name + "'");
  };
  if (name.rfind("tight:", 0) == 0) return tight_example(number(name.substr(6)));
  if (name == "k4" || name == "K4") return k4_instance();
  if (name.rfind("uniform:", 0) == 0) {
    const std::string rest = name.substr(8);
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw UsageError("bad builtin instance '" + name + "'");
    return uniform_instance(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  for (NamedMatroid& m : bundled_matroids()) {
    if (m.name == name) return {m.name, m.matroid, std::nullopt};
  }
  throw UsageError("unknown builtin instance '" + name + "'");
}

}  // namespace gcmb
