/* Copyright 2026 The kanbex Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "kanbex/format.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace kanbex {

namespace {

void append_runs(std::string& out, const KanPresentation& kan, const std::vector<ArrowId>& arrows) {
  for (std::size_t i = 0; i < arrows.size();) {
    std::size_t j = i;
    while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
    if (!out.empty()) out += '*';
    out += kan.arrow(arrows[i]).label;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Sort key entry: arrows rank below every X-element.
using Key = std::vector<std::pair<int, std::uint32_t>>;

Key key_of(const Path& p, const OrderSpec& spec) {
  Key k;
  for (ArrowId a : p.arrows) k.emplace_back(0, spec.arrow_rank[index_of(a)]);
  return k;
}

Key key_of(const Term& t, const OrderSpec& spec) {
  Key k{{1, spec.element_rank[index_of(t.tag)]}};
  for (ArrowId a : t.path.arrows) k.emplace_back(0, spec.arrow_rank[index_of(a)]);
  return k;
}

bool key_less(const Key& a, const Key& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::string format_path(const KanPresentation& kan, const Path& p) {
  if (p.is_identity()) return "IdWord";
  std::string out;
  append_runs(out, kan, p.arrows);
  return out;
}

std::string format_term(const KanPresentation& kan, const Term& t) {
  std::string out = kan.element(t.tag).label;
  append_runs(out, kan, t.path.arrows);
  return out;
}

std::string format_rule(const KanPresentation& kan, const TermRule& r) {
  return format_term(kan, r.lhs) + " -> " + format_term(kan, r.rhs);
}

std::string format_rule(const KanPresentation& kan, const PathRule& r) {
  return format_path(kan, r.lhs) + " -> " + format_path(kan, r.rhs);
}

std::vector<std::string> parse_word(std::string_view text) {
  text = trim(text);
  std::vector<std::string> out;
  if (text.empty() || text == "IdWord") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("*,", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = trim(text.substr(start, end - start));
    if (piece.empty()) throw ParseError("empty factor in word '" + std::string(text) + "'");
    std::size_t reps = 1;
    if (auto caret = piece.find('^'); caret != std::string_view::npos) {
      auto digits = trim(piece.substr(caret + 1));
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), reps);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || reps == 0) {
        throw ParseError("bad exponent in '" + std::string(piece) + "'");
      }
      piece = trim(piece.substr(0, caret));
      if (piece.empty()) throw ParseError("exponent without a label in '" + std::string(text) + "'");
    }
    for (std::size_t i = 0; i < reps; ++i) out.emplace_back(piece);
    start = end + 1;
  }
  return out;
}

Term parse_term(const KanPresentation& kan, std::string_view text) { return list_as_term(parse_word(text), kan); }

Path parse_path(const KanPresentation& kan, std::string_view text, std::optional<ObjectId> source) {
  return path_from_labels(kan, parse_word(text), source);
}

std::vector<std::string> format_system(const KanPresentation& kan, const RewriteSystem& rules,
                                       const OrderSpec& spec) {
  struct Line {
    Key lhs;
    Key rhs;
    std::string text;
  };
  std::vector<Line> lines;
  for (const auto& r : rules.path_rules) {
    lines.push_back({key_of(r.lhs, spec), key_of(r.rhs, spec), format_rule(kan, r)});
  }
  for (const auto& r : rules.term_rules) {
    lines.push_back({key_of(r.lhs, spec), key_of(r.rhs, spec), format_rule(kan, r)});
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    if (a.lhs != b.lhs) return key_less(a.lhs, b.lhs);
    return key_less(a.rhs, b.rhs);
  });
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (auto& l : lines) out.push_back(std::move(l.text));
  return out;
}

RewriteSystem parse_system(const KanPresentation& kan, const std::vector<std::string>& lines) {
  RewriteSystem rules;
  for (const auto& raw : lines) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("rule line without '->': " + std::string(line));
    auto lhs = parse_word(line.substr(0, arrow));
    auto rhs = parse_word(line.substr(arrow + 2));
    if (!lhs.empty() && kan.find_element(lhs.front())) {
      rules.term_rules.push_back(TermRule{list_as_term(lhs, kan), list_as_term(rhs, kan)});
    } else {
      Path l = path_from_labels(kan, lhs);
      rules.path_rules.push_back(PathRule{l, path_from_labels(kan, rhs, l.source)});
    }
  }
  return rules;
}

}  // namespace kanbex
