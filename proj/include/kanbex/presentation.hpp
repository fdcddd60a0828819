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

#ifndef KANBEX_PRESENTATION_HPP_
#define KANBEX_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kanbex/types.hpp"

namespace kanbex {

struct LabelledArrow {
  std::string label;
  ObjectId src{};
  ObjectId tgt{};

  friend bool operator==(const LabelledArrow&, const LabelledArrow&) = default;
};

/// Γ-arrows carry no label; they are identified by their position in ArrA.
struct GammaArrow {
  ObjectId src{};
  ObjectId tgt{};

  friend bool operator==(const GammaArrow&, const GammaArrow&) = default;
};

/// An element of some set XA, owned by the Γ-object A.
struct Element {
  std::string label;
  ObjectId owner{};

  friend bool operator==(const Element&, const Element&) = default;
};

using PathPair = std::pair<Path, Path>;

/// The finite record kan<Γ|Δ|RelB|X|F>.
///
/// Objects are stored by position; `ob_a` / `ob_b` keep the external integer
/// names used in input files. X-elements are flattened into `elements` in
/// declaration order and `x_ob_a[i]` lists the members of X(A_i).
struct KanPresentation {
  std::vector<int> ob_a;
  std::vector<GammaArrow> arr_a;
  std::vector<int> ob_b;
  std::vector<LabelledArrow> arr_b;
  std::vector<PathPair> rel_b;
  std::vector<ObjectId> f_ob_a;
  std::vector<Path> f_arr_a;
  std::vector<Element> elements;
  std::vector<std::vector<ElementId>> x_ob_a;
  std::vector<std::vector<ElementId>> x_arr_a;

  [[nodiscard]] std::optional<ArrowId> find_arrow(std::string_view label) const;
  [[nodiscard]] std::optional<ElementId> find_element(std::string_view label) const;
  [[nodiscard]] std::optional<ObjectId> find_object_b(int name) const;
  [[nodiscard]] std::optional<ObjectId> find_object_a(int name) const;

  [[nodiscard]] const LabelledArrow& arrow(ArrowId id) const { return arr_b.at(index_of(id)); }
  [[nodiscard]] const Element& element(ElementId id) const { return elements.at(index_of(id)); }

  /// Target object of a Δ-path (its source when it is an identity).
  [[nodiscard]] ObjectId target(const Path& p) const;
  /// τ(x|p).
  [[nodiscard]] ObjectId tau(const Term& t) const { return target(t.path); }
  /// F(A) for the Γ-object owning the tag; the source of every term on x.
  [[nodiscard]] ObjectId term_source(ElementId x) const;
  [[nodiscard]] Term identity_term(ElementId x) const;

  /// Appends x to X(owner); `x_ob_a` must already have an entry for owner.
  ElementId add_element(std::string label, ObjectId owner);

  friend bool operator==(const KanPresentation&, const KanPresentation&) = default;
};

struct Violation {
  std::string field;
  std::size_t index = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] std::string to_string() const;
};

/// Checks every structural invariant of the record; never throws.
[[nodiscard]] ValidationReport validate_presentation(const KanPresentation& p);

/// Whether `p` is a well-formed path in Δ (indices in range, consecutive
/// arrows composable, first arrow leaving `p.source`).
[[nodiscard]] bool is_valid_path(const KanPresentation& kan, const Path& p);

/// Checked composition in the free category on Δ.
/// Throws CompositionError when tgt(p) != src(q).
[[nodiscard]] Path compose_paths(const KanPresentation& kan, const Path& p, const Path& q);

/// Builds a path from arrow labels. An empty label list needs `source`.
[[nodiscard]] Path path_from_labels(const KanPresentation& kan,
                                    const std::vector<std::string>& labels,
                                    std::optional<ObjectId> source = std::nullopt);

[[nodiscard]] std::vector<std::string> path_labels(const KanPresentation& kan, const Path& p);

/// List(x|p) = [x, b1, ..., bn]; the identity path contributes nothing.
[[nodiscard]] std::vector<std::string> term_as_list(const KanPresentation& kan, const Term& t);

/// Inverse of term_as_list. Throws ParseError on unknown labels, a first
/// entry that is not an X-element, or a path that does not start at F(A).
[[nodiscard]] Term list_as_term(const std::vector<std::string>& labels, const KanPresentation& kan);

}  // namespace kanbex

#endif  // KANBEX_PRESENTATION_HPP_
