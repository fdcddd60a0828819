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

#ifndef KANBEX_KAN_EVAL_HPP_
#define KANBEX_KAN_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kanbex/ordering.hpp"
#include "kanbex/presentation.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex {

inline constexpr std::size_t kDefaultEnumerationLimit = 1000;

class ActionError : public KanError {
 public:
  using KanError::KanError;
};

enum class EnumerationStatus : std::uint8_t { kFinite, kLimitExceeded };

/// Normal forms of ⊔_B KB grouped by τ̄.
struct KanTables {
  EnumerationStatus status = EnumerationStatus::kFinite;
  /// elements[B] lists the normal forms with target B, in discovery order.
  std::vector<std::vector<Term>> elements;
  std::size_t total = 0;
  /// Number of length stages that were fully processed.
  std::size_t stages = 0;

  [[nodiscard]] bool finite() const noexcept { return status == EnumerationStatus::kFinite; }
};

/// Catalogues the irreducible terms length by length: first every x|id, then
/// one-arrow extensions of the previous stage's survivors, until a stage
/// yields nothing or `limit` elements would be exceeded. Within a stage, terms
/// are visited in tag order and extensions in arrow order.
///
/// Throws KanError when `rules` is not confluent.
[[nodiscard]] KanTables enumerate(const KanPresentation& kan, const RewriteSystem& rules, const OrderSpec& spec,
                                  std::size_t limit = kDefaultEnumerationLimit);

/// τ̄ of a normal form.
[[nodiscard]] ObjectId tau_bar(const KanPresentation& kan, const Term& normal_form);

/// [t]·q = [t·q]. Throws ActionError when src(q) differs from τ̄(t).
[[nodiscard]] Term act(const KanPresentation& kan, const Term& normal_form, const Path& q,
                       const RewriteSystem& rules);

/// ε_A(x) = [x|id_FA]. Throws KanError for an unknown element.
[[nodiscard]] Term epsilon(const KanPresentation& kan, ElementId x, const RewriteSystem& rules);

/// For every Γ-arrow a and x in X(src a): [x|id]·F(a) = [x·a|id].
[[nodiscard]] bool naturality_check(const KanPresentation& kan, const RewriteSystem& rules);

}  // namespace kanbex

#endif  // KANBEX_KAN_EVAL_HPP_
