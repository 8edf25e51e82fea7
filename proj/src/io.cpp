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

#include "gcmb/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcmb/errors.hpp"

namespace gcmb {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto hash = text.find('#');
    if (hash != std::string::npos) text.resize(hash);
    std::istringstream ls(text);
    Line line{number, {}};
    for (std::string t; ls >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::int64_t to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError("expected integer, got '" + s + "'", line);
}

int to_small(const std::string& s, int line) {
  const std::int64_t v = to_int(s, line);
  if (v < -(1 << 30) || v > (1 << 30)) throw ParseError("integer out of range: " + s, line);
  return static_cast<int>(v);
}

// `key <value>` line.
int keyed(const Line& line, const std::string& key) {
  if (line.tokens.size() != 2 || line.tokens[0] != key) {
    throw ParseError("expected `" + key + " <value>`", line.number);
  }
  return to_small(line.tokens[1], line.number);
}

template <class F>
auto rethrow_at(int line, F f) {
  try {
    return f();
  } catch (const UsageError& e) {
    throw ParseError(e.what(), line);
  }
}

Matroid parse_matroid(const std::vector<Line>& lines, bool trust) {
  if (lines.empty()) throw ParseError("empty matroid file", 0);
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "matroid") {
    throw ParseError("expected `matroid <kind>`", head.number);
  }
  const std::string& kind = head.tokens[1];
  auto need = [&](std::size_t i) -> const Line& {
    if (i >= lines.size()) throw ParseError("unexpected end of matroid file", lines.back().number);
    return lines[i];
  };
  if (kind == "uniform") {
    const int n = keyed(need(1), "n");
    const int r = keyed(need(2), "r");
    if (lines.size() > 3) throw ParseError("trailing content", lines[3].number);
    return rethrow_at(head.number, [&] { return make_uniform(n, r); });
  }
  if (kind == "graphic") {
    const int v = keyed(need(1), "vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const Line& l = lines[i];
      if (l.tokens.size() != 3 || l.tokens[0] != "edge") {
        throw ParseError("expected `edge <u> <w>`", l.number);
      }
      edges.push_back({to_small(l.tokens[1], l.number), to_small(l.tokens[2], l.number)});
    }
    return rethrow_at(head.number, [&] { return make_graphic(v, edges); });
  }
  if (kind == "linear") {
    const int p = keyed(need(1), "field");
    const int r = keyed(need(2), "rows");
    if (r < 1) throw ParseError("rows must be positive", lines[2].number);
    std::vector<std::vector<std::int64_t>> rows;
    for (int i = 0; i < r; ++i) {
      const Line& l = need(3 + i);
      std::vector<std::int64_t> row;
      for (const std::string& t : l.tokens) row.push_back(to_int(t, l.number));
      if (!rows.empty() && row.size() != rows[0].size()) {
        throw ParseError("row length differs from the first row", l.number);
      }
      rows.push_back(std::move(row));
    }
    if (lines.size() > static_cast<std::size_t>(3 + r)) {
      throw ParseError("trailing content", lines[3 + r].number);
    }
    return rethrow_at(head.number, [&] { return make_linear(p, rows); });
  }
  if (kind == "explicit") {
    const int n = keyed(need(1), "n");
    if (n < 0 || n > kMaxGroundSize) throw ParseError("n outside [0, 64]", lines[1].number);
    std::vector<ElementSet> bases;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const Line& l = lines[i];
      if (l.tokens.empty() || l.tokens[0] != "base") throw ParseError("expected `base ...`", l.number);
      ElementSet b;
      for (std::size_t j = 1; j < l.tokens.size(); ++j) {
        const int e = to_small(l.tokens[j], l.number);
        if (e < 0 || e >= n) throw ParseError("element out of range", l.number);
        if (b.contains(e)) throw ParseError("repeated element in a base", l.number);
        b = b.with(e);
      }
      bases.push_back(b);
    }
    return rethrow_at(head.number, [&] { return make_explicit(n, bases, trust); });
  }
  if (kind == "partition") {
    const int n = keyed(need(1), "n");
    if (n < 0 || n > kMaxGroundSize) throw ParseError("n outside [0, 64]", lines[1].number);
    std::vector<int> class_of(n, -1);
    std::vector<int> capacities;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const Line& l = lines[i];
      if (l.tokens.size() < 2 || l.tokens[0] != "class") {
        throw ParseError("expected `class <capacity> <elements...>`", l.number);
      }
      capacities.push_back(to_small(l.tokens[1], l.number));
      for (std::size_t j = 2; j < l.tokens.size(); ++j) {
        const int e = to_small(l.tokens[j], l.number);
        if (e < 0 || e >= n) throw ParseError("element out of range", l.number);
        if (class_of[e] != -1) throw ParseError("element in two classes", l.number);
        class_of[e] = static_cast<int>(capacities.size()) - 1;
      }
    }
    for (int e = 0; e < n; ++e) {
      if (class_of[e] == -1) {
        throw ParseError("element " + std::to_string(e) + " belongs to no class", head.number);
      }
    }
    return rethrow_at(head.number, [&] { return make_partition(class_of, capacities); });
  }
  throw ParseError("unknown matroid kind '" + kind + "'", head.number);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  return in;
}

// Collects `<index> <value>` lines, one per element.
std::vector<std::string> indexed_values(std::istream& in, int n, const char* what) {
  std::vector<std::string> values(n);
  std::vector<bool> seen(n, false);
  for (const Line& l : tokenize(in)) {
    if (l.tokens.size() != 2) throw ParseError(std::string("expected `<index> <") + what + ">`", l.number);
    const int e = to_small(l.tokens[0], l.number);
    if (e < 0 || e >= n) {
      throw ParseError("element " + std::to_string(e) + " outside [0, " + std::to_string(n) + ")",
                       l.number);
    }
    if (seen[e]) throw ParseError("element " + std::to_string(e) + " listed twice", l.number);
    seen[e] = true;
    values[e] = l.tokens[1];
  }
  for (int e = 0; e < n; ++e) {
    if (!seen[e]) throw ParseError("no " + std::string(what) + " for element " + std::to_string(e), 0);
  }
  return values;
}

}  // namespace

Matroid read_matroid(std::istream& in, bool trust) { return parse_matroid(tokenize(in), trust); }

Matroid read_matroid(const std::filesystem::path& path, bool trust) {
  auto in = open(path);
  return read_matroid(in, trust);
}

void write_matroid(std::ostream& out, const Matroid& m) {
  out << "matroid explicit\nn " << m.size() << '\n';
  for (BaseSet b : enumerate_bases(m)) {
    out << "base";
    b.for_each([&](int e) { out << ' ' << e; });
    out << '\n';
  }
}

Labeling read_labeling(std::istream& in, const GroupSpec& group, int n) {
  std::vector<GroupElement> labels;
  int e = 0;
  for (const std::string& v : indexed_values(in, n, "label")) {
    try {
      labels.push_back(group.parse_element(v));
    } catch (const ParseError& err) {
      throw ParseError("label of element " + std::to_string(e) + ": " + err.what(), 0);
    }
    ++e;
  }
  return Labeling(group, labels);
}

Labeling read_labeling(const std::filesystem::path& path, const GroupSpec& group, int n) {
  auto in = open(path);
  return read_labeling(in, group, n);
}

WeightVector read_weights(std::istream& in, int n) {
  WeightVector w;
  for (const std::string& v : indexed_values(in, n, "weight")) w.push_back(parse_weight(v));
  return w;
}

WeightVector read_weights(const std::filesystem::path& path, int n) {
  auto in = open(path);
  return read_weights(in, n);
}

}  // namespace gcmb
