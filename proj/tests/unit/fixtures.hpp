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

#ifndef KANBEX_TESTS_FIXTURES_HPP_
#define KANBEX_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "kanbex/encodings.hpp"
#include "kanbex/format.hpp"
#include "kanbex/ordering.hpp"
#include "kanbex/presentation_io.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex::test {

inline std::string data_path(const std::string& name) { return std::string(KANBEX_TEST_DATA) + "/" + name; }

inline KanPresentation load(const std::string& name) { return presentation_from_json(read_json_file(data_path(name))); }

inline KanPresentation encode(const std::string& kind, const std::string& name) {
  return encode_from_json(kind, read_json_file(data_path(name)));
}

/// Completed, interreduced system under declaration-order length-lex.
inline CompletionResult completed(const KanPresentation& kan, CompletionOptions options = {}) {
  LengthLexOrdering order(OrderSpec::declaration(kan));
  return complete(initial_rules(kan, order), order, options);
}

inline std::vector<std::string> sorted_lines(const KanPresentation& kan, const RewriteSystem& rules) {
  auto lines = format_system(kan, rules, OrderSpec::declaration(kan));
  std::sort(lines.begin(), lines.end());
  return lines;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline Term term(const KanPresentation& kan, const std::string& text) { return parse_term(kan, text); }

}  // namespace kanbex::test

#endif  // KANBEX_TESTS_FIXTURES_HPP_
