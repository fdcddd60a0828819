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

#ifndef KANBEX_FORMAT_HPP_
#define KANBEX_FORMAT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "kanbex/ordering.hpp"
#include "kanbex/presentation.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex {

// Text forms follow the GAP word printer: labels joined by '*', runs of one
// label written `b^n`, the identity path written `IdWord`, and a term on an
// identity path written as its bare tag.

[[nodiscard]] std::string format_path(const KanPresentation& kan, const Path& p);
[[nodiscard]] std::string format_term(const KanPresentation& kan, const Term& t);
[[nodiscard]] std::string format_rule(const KanPresentation& kan, const TermRule& r);
[[nodiscard]] std::string format_rule(const KanPresentation& kan, const PathRule& r);

/// Splits `x1*b1*b2`, `H*a^2*c` or `x1,b1` into labels. `IdWord` and the
/// empty string give an empty list.
[[nodiscard]] std::vector<std::string> parse_word(std::string_view text);

[[nodiscard]] Term parse_term(const KanPresentation& kan, std::string_view text);
/// `source` is needed only for `IdWord`.
[[nodiscard]] Path parse_path(const KanPresentation& kan, std::string_view text,
                              std::optional<ObjectId> source = std::nullopt);

/// One `lhs -> rhs` line per rule, path rules and term rules interleaved in
/// canonical order: shorter lhs list first, then position by position with
/// Δ-arrows ranked before X-elements.
[[nodiscard]] std::vector<std::string> format_system(const KanPresentation& kan, const RewriteSystem& rules,
                                                     const OrderSpec& spec);

/// Parses lines produced by format_system back into a system. Lines whose
/// lhs starts with an X-element become term rules.
[[nodiscard]] RewriteSystem parse_system(const KanPresentation& kan, const std::vector<std::string>& lines);

}  // namespace kanbex

#endif  // KANBEX_FORMAT_HPP_
