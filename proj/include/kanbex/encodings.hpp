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

#ifndef KANBEX_ENCODINGS_HPP_
#define KANBEX_ENCODINGS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kanbex/presentation.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex {

// Constructors that phrase classical problems (normal forms, cosets, orbits,
// colimits, induced actions) as Kan extension presentations. Each returns a
// record that passes validate_presentation, or throws KanError.

using Word = std::vector<std::string>;
using WordPair = std::pair<Word, Word>;

struct MonoidPresentationDesc {
  std::vector<std::string> generators;
  std::vector<WordPair> relations;
};

struct ArrowDesc {
  std::string label;
  int src = 0;
  int tgt = 0;
};

/// A finitely presented category. An empty relation side is the identity at
/// the endpoint of the other side.
struct CategoryDesc {
  std::vector<int> objects;
  std::vector<ArrowDesc> arrows;
  std::vector<WordPair> relations;
};

struct CosetSystemDesc {
  MonoidPresentationDesc group;
  std::vector<Word> subgroup;
  std::string tag = "H";
};

/// A right action of a monoid on named points: images[g][i] is points[i]·g.
struct ActionDesc {
  MonoidPresentationDesc monoid;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> images;
};

enum class OrbitVariant { kPlain, kConjugation };

/// Γ with X: a diagram of finite sets. functions[k] lists the images of
/// sets[src(k)] under arrow k.
struct ColimitDiagramDesc {
  std::vector<int> objects;
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::vector<std::string>> sets;
  std::vector<std::vector<std::string>> functions;
};

/// Action data (Γ, X) pushed along a functor into a presented category.
struct InducedActionDesc {
  ColimitDiagramDesc action;
  CategoryDesc target;
  std::vector<int> object_images;
  std::vector<Word> arrow_images;
};

/// A morphism of one-object presentations together with a right action of
/// the source generators on points.
struct GroupMorphismDesc {
  std::vector<std::string> source_generators;
  MonoidPresentationDesc target;
  std::vector<Word> images;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> action;
};

/// Γ: one object, no arrows; X0 one point; Δ: one loop per generator.
[[nodiscard]] KanPresentation from_monoid_presentation(const MonoidPresentationDesc& d, std::string tag = "e");

/// Γ discrete on the objects, a one-point XA per object named `e<object>`.
[[nodiscard]] KanPresentation from_category_presentation(const CategoryDesc& d);

/// Γ: one loop per subgroup word acting trivially on X0 = {tag}.
[[nodiscard]] KanPresentation from_coset_system(const CosetSystemDesc& d);

/// Quotient of a monoid by the right congruence generated by w ~ 1.
[[nodiscard]] KanPresentation from_right_congruence(const MonoidPresentationDesc& monoid,
                                                    const std::vector<Word>& generators, std::string tag = "H");

/// Equivalence classes of `points` under the relation generated by `pairs`.
/// With an action, the quotient is by the smallest equivariant equivalence
/// and the monoid acts on the classes.
[[nodiscard]] KanPresentation from_relation_quotient(
    const std::vector<std::string>& points, const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::optional<ActionDesc>& action = std::nullopt);

/// Orbits of an action. kConjugation ignores d.points and d.images: it
/// enumerates the (finite) group from d.monoid and acts by x ↦ g⁻¹xg.
[[nodiscard]] KanPresentation from_action_orbits(const ActionDesc& d, OrbitVariant variant = OrbitVariant::kPlain);

/// Element list and conjugation action of a finite group given as a monoid
/// presentation. Point labels are compact normal forms (`id`, `a`, `a2b`).
[[nodiscard]] ActionDesc conjugation_action(const MonoidPresentationDesc& group,
                                            const CompletionLimits& limits = {});

[[nodiscard]] KanPresentation from_colimit_diagram(const ColimitDiagramDesc& d);

[[nodiscard]] KanPresentation from_induced_action(const InducedActionDesc& d);

[[nodiscard]] KanPresentation from_group_morphism(const GroupMorphismDesc& d);

/// Reads a descriptor of the given kind (monoid, category, cosets,
/// congruence, quotient, orbits, colimit, induced) and builds its
/// presentation.
[[nodiscard]] KanPresentation encode_from_json(std::string_view kind, const nlohmann::json& doc);

}  // namespace kanbex

#endif  // KANBEX_ENCODINGS_HPP_
