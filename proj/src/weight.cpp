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

#include "gcmb/weight.hpp"

#include <cctype>
#include <charconv>

#include "gcmb/errors.hpp"

namespace gcmb {
namespace {

std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed weight '" + std::string(whole) + "'", 0);
  }
  return v;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Weight(parse_int64(text, text));
  const std::int64_t num = parse_int64(text.substr(0, slash), text);
  const std::int64_t den = parse_int64(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in weight '" + std::string(text) + "'", 0);
  return Weight(num, den);
}

std::string format_weight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

}  // namespace gcmb
