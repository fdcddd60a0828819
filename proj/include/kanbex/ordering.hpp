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

#ifndef KANBEX_ORDERING_HPP_
#define KANBEX_ORDERING_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kanbex/presentation.hpp"
#include "kanbex/types.hpp"

namespace kanbex {

/// Linear orders on the X-elements and on the arrows of Δ, stored as ranks
/// (smaller rank = smaller label).
struct OrderSpec {
  std::vector<std::uint32_t> element_rank;
  std::vector<std::uint32_t> arrow_rank;

  /// Declaration order of the presentation.
  static OrderSpec declaration(const KanPresentation& kan);

  /// Overrides declaration order with explicit label sequences. An empty
  /// sequence keeps declaration order for that namespace; a non-empty one must
  /// list every label of its namespace exactly once.
  static OrderSpec from_labels(const KanPresentation& kan, const std::vector<std::string>& x_order,
                               const std::vector<std::string>& delta_order);
};

/// Comparator contract for the well-orderings >_T and >_P used by rewriting.
/// Implementations must be admissible, total, and well-founded.
class Ordering {
 public:
  virtual ~Ordering() = default;

  [[nodiscard]] virtual std::strong_ordering compare(const Path& p, const Path& q) const = 0;
  [[nodiscard]] virtual std::strong_ordering compare(const Term& s, const Term& t) const = 0;
  [[nodiscard]] virtual std::string_view name() const noexcept = 0;
};

/// Length first, then the tag, then arrows position by position.
class LengthLexOrdering final : public Ordering {
 public:
  explicit LengthLexOrdering(OrderSpec spec) : spec_(std::move(spec)) {}

  [[nodiscard]] std::strong_ordering compare(const Path& p, const Path& q) const override;
  [[nodiscard]] std::strong_ordering compare(const Term& s, const Term& t) const override;
  [[nodiscard]] std::string_view name() const noexcept override { return "lenlex"; }

  [[nodiscard]] const OrderSpec& spec() const noexcept { return spec_; }

 private:
  [[nodiscard]] std::strong_ordering compare_arrows(const std::vector<ArrowId>& a,
                                                    const std::vector<ArrowId>& b) const;

  OrderSpec spec_;
};

/// Builds the ordering named on the command line. Only "lenlex" exists.
[[nodiscard]] std::unique_ptr<Ordering> make_ordering(std::string_view name, OrderSpec spec);

using Side = std::variant<Term, Path>;

template <typename T>
struct OrientedPair {
  T greater;
  T lesser;
};

/// (max, min) of a pair, or nullopt when both sides are equal.
template <typename T>
[[nodiscard]] std::optional<OrientedPair<T>> orient(const T& a, const T& b, const Ordering& order) {
  auto c = order.compare(a, b);
  if (c == std::strong_ordering::equal) return std::nullopt;
  if (c == std::strong_ordering::greater) return OrientedPair<T>{a, b};
  return OrientedPair<T>{b, a};
}

/// Runtime-typed variant of orient. Throws KanError when one side is a term
/// and the other a path.
[[nodiscard]] std::optional<std::pair<Side, Side>> orient_pair(const Side& a, const Side& b,
                                                               const Ordering& order);

}  // namespace kanbex

#endif  // KANBEX_ORDERING_HPP_
