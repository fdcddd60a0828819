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

#include "kanbex/encodings.hpp"

#include <algorithm>

#include "kanbex/format.hpp"
#include "kanbex/kan_eval.hpp"

namespace kanbex {

namespace {

bool label_taken(const KanPresentation& kan, std::string_view label) {
  return kan.find_arrow(label).has_value() || kan.find_element(label).has_value();
}

std::string fresh_label(const KanPresentation& kan, const std::string& base) {
  if (!label_taken(kan, base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!label_taken(kan, candidate)) return candidate;
  }
}

ObjectId add_gamma_object(KanPresentation& kan, int name, ObjectId image) {
  kan.ob_a.push_back(name);
  kan.f_ob_a.push_back(image);
  kan.x_ob_a.emplace_back();
  return make_id<ObjectId>(kan.ob_a.size() - 1);
}

void add_gamma_arrow(KanPresentation& kan, ObjectId src, ObjectId tgt, Path image, std::vector<ElementId> xa) {
  kan.arr_a.push_back(GammaArrow{src, tgt});
  kan.f_arr_a.push_back(std::move(image));
  kan.x_arr_a.push_back(std::move(xa));
}

Path identity_at(ObjectId o) { return Path{o, {}}; }

ElementId element_or_throw(const KanPresentation& kan, const std::string& label) {
  auto id = kan.find_element(label);
  if (!id) throw KanError("unknown point '" + label + "'");
  return *id;
}

KanPresentation checked(KanPresentation kan) {
  if (auto report = validate_presentation(kan); !report.ok()) {
    throw KanError("encoding produced an invalid presentation:\n" + report.to_string());
  }
  return kan;
}

// Δ as a single object carrying one loop per generator and the relations.
void add_one_object_delta(KanPresentation& kan, const MonoidPresentationDesc& m) {
  kan.ob_b.push_back(1);
  const ObjectId only = make_id<ObjectId>(0);
  for (const auto& g : m.generators) kan.arr_b.push_back(LabelledArrow{g, only, only});
  for (const auto& [l, r] : m.relations) {
    kan.rel_b.emplace_back(path_from_labels(kan, l, only), path_from_labels(kan, r, only));
  }
}

void add_category_delta(KanPresentation& kan, const CategoryDesc& d) {
  kan.ob_b = d.objects;
  for (const auto& a : d.arrows) {
    auto src = kan.find_object_b(a.src);
    auto tgt = kan.find_object_b(a.tgt);
    if (!src || !tgt) throw KanError("arrow '" + a.label + "' has an endpoint outside the object list");
    kan.arr_b.push_back(LabelledArrow{a.label, *src, *tgt});
  }
  for (const auto& [l, r] : d.relations) {
    if (l.empty() && r.empty()) continue;
    Path lp = l.empty() ? Path{} : path_from_labels(kan, l);
    Path rp = r.empty() ? Path{} : path_from_labels(kan, r);
    if (l.empty()) lp = identity_at(rp.source);
    if (r.empty()) rp = identity_at(lp.source);
    if (lp.source != rp.source || kan.target(lp) != kan.target(rp)) {
      throw KanError("relation " + format_path(kan, lp) + " = " + format_path(kan, rp) + " is not parallel");
    }
    kan.rel_b.emplace_back(std::move(lp), std::move(rp));
  }
}

// Γ and X of a diagram of sets; every object is sent to `image_of(i)`.
template <typename ImageOf>
void add_diagram(KanPresentation& kan, const ColimitDiagramDesc& d, ImageOf image_of) {
  if (d.sets.size() != d.objects.size()) throw KanError("expected one set per object");
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    ObjectId a = add_gamma_object(kan, d.objects[i], image_of(i));
    for (const auto& x : d.sets[i]) {
      if (label_taken(kan, x)) throw KanError("label '" + x + "' is used twice");
      kan.add_element(x, a);
    }
  }
}

std::vector<ElementId> images_of(const KanPresentation& kan, const std::vector<std::string>& labels) {
  std::vector<ElementId> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(element_or_throw(kan, l));
  return out;
}

void check_action_respects_relations(const ActionDesc& d) {
  const auto& gens = d.monoid.generators;
  if (d.images.size() != gens.size()) throw KanError("expected one image list per generator");
  auto apply = [&](std::size_t point, const Word& w) {
    for (const auto& g : w) {
      auto it = std::find(gens.begin(), gens.end(), g);
      if (it == gens.end()) throw KanError("unknown generator '" + g + "'");
      const auto& row = d.images[static_cast<std::size_t>(it - gens.begin())];
      if (row.size() != d.points.size()) throw KanError("image list for '" + g + "' has the wrong length");
      auto p = std::find(d.points.begin(), d.points.end(), row[point]);
      if (p == d.points.end()) throw KanError("image '" + row[point] + "' is not a point");
      point = static_cast<std::size_t>(p - d.points.begin());
    }
    return point;
  };
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    for (const auto& [l, r] : d.monoid.relations) {
      if (apply(i, l) != apply(i, r)) {
        throw KanError("action on '" + d.points[i] + "' does not satisfy a monoid relation");
      }
    }
  }
}

std::string compact_name(const std::vector<std::string>& word, bool single_letters) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (single_letters) {
      out += word[i];
      if (j - i > 1) out += std::to_string(j - i);
    } else {
      for (std::size_t k = i; k < j; ++k) {
        if (!out.empty()) out += '.';
        out += word[k];
      }
    }
    i = j;
  }
  return out;
}

}  // namespace

KanPresentation from_monoid_presentation(const MonoidPresentationDesc& d, std::string tag) {
  KanPresentation kan;
  add_one_object_delta(kan, d);
  ObjectId a = add_gamma_object(kan, 1, make_id<ObjectId>(0));
  kan.add_element(fresh_label(kan, tag), a);
  return checked(std::move(kan));
}

KanPresentation from_category_presentation(const CategoryDesc& d) {
  KanPresentation kan;
  add_category_delta(kan, d);
  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    ObjectId a = add_gamma_object(kan, d.objects[i], make_id<ObjectId>(i));
    kan.add_element(fresh_label(kan, "e" + std::to_string(d.objects[i])), a);
  }
  return checked(std::move(kan));
}

KanPresentation from_coset_system(const CosetSystemDesc& d) {
  KanPresentation kan;
  add_one_object_delta(kan, d.group);
  const ObjectId only = make_id<ObjectId>(0);
  ObjectId a = add_gamma_object(kan, 1, only);
  if (label_taken(kan, d.tag)) throw KanError("coset tag '" + d.tag + "' collides with a generator");
  ElementId h = kan.add_element(d.tag, a);
  for (const auto& w : d.subgroup) add_gamma_arrow(kan, a, a, path_from_labels(kan, w, only), {h});
  return checked(std::move(kan));
}

KanPresentation from_right_congruence(const MonoidPresentationDesc& monoid, const std::vector<Word>& generators,
                                      std::string tag) {
  return from_coset_system(CosetSystemDesc{monoid, generators, std::move(tag)});
}

KanPresentation from_relation_quotient(const std::vector<std::string>& points,
                                       const std::vector<std::pair<std::string, std::string>>& pairs,
                                       const std::optional<ActionDesc>& action) {
  KanPresentation kan;
  if (action) {
    check_action_respects_relations(*action);
    add_one_object_delta(kan, action->monoid);
  } else {
    kan.ob_b.push_back(1);
  }
  const ObjectId only = make_id<ObjectId>(0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    ObjectId a = add_gamma_object(kan, static_cast<int>(i) + 1, only);
    if (label_taken(kan, points[i])) throw KanError("label '" + points[i] + "' is used twice");
    kan.add_element(points[i], a);
  }
  auto object_of = [&](const std::string& p) { return kan.element(element_or_throw(kan, p)).owner; };
  for (const auto& [p, q] : pairs) {
    add_gamma_arrow(kan, object_of(p), object_of(q), identity_at(only), {element_or_throw(kan, q)});
  }
  if (action) {
    if (action->points != points) throw KanError("action must be given on the quotient's points");
    for (std::size_t g = 0; g < action->monoid.generators.size(); ++g) {
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& image = action->images[g][i];
        add_gamma_arrow(kan, make_id<ObjectId>(i), object_of(image), Path{only, {make_id<ArrowId>(g)}},
                        {element_or_throw(kan, image)});
      }
    }
  }
  return checked(std::move(kan));
}

ActionDesc conjugation_action(const MonoidPresentationDesc& group, const CompletionLimits& limits) {
  KanPresentation kan = from_monoid_presentation(group, "e");
  const OrderSpec spec = OrderSpec::declaration(kan);
  LengthLexOrdering order(spec);
  auto completed = complete(initial_rules(kan, order), order, CompletionOptions{limits, true});
  if (!completed.complete()) throw KanError("group presentation did not complete: " + completed.reason);
  const RewriteSystem& rules = completed.rules;
  auto tables = enumerate(kan, rules, spec, 100000);
  if (!tables.finite()) throw KanError("group is too large to enumerate");
  const std::vector<Term>& elements = tables.elements.at(0);

  auto index_of_element = [&](const Term& t) {
    auto it = std::find(elements.begin(), elements.end(), t);
    if (it == elements.end()) throw KanError("normal form missing from the element list");
    return static_cast<std::size_t>(it - elements.begin());
  };
  const Term one = kan.identity_term(make_id<ElementId>(0));
  auto times = [&](const Term& x, const Path& w) { return reduce_term(act_unchecked(x, w), rules); };

  const bool single = std::all_of(group.generators.begin(), group.generators.end(),
                                  [](const std::string& g) { return g.size() == 1; });
  ActionDesc out;
  out.monoid = group;
  for (const auto& e : elements) out.points.push_back(compact_name(path_labels(kan, e.path), single));
  for (std::size_t g = 0; g < group.generators.size(); ++g) {
    const Path gen{make_id<ObjectId>(0), {make_id<ArrowId>(g)}};
    const Term* inverse = nullptr;
    for (const auto& h : elements) {
      if (times(times(one, gen), h.path) == one) {
        inverse = &h;
        break;
      }
    }
    if (!inverse) throw KanError("generator '" + group.generators[g] + "' has no inverse");
    std::vector<std::string> row;
    for (const auto& x : elements) {
      Term conj = times(times(act_unchecked(one, inverse->path), x.path), gen);
      row.push_back(out.points[index_of_element(conj)]);
    }
    out.images.push_back(std::move(row));
  }
  return out;
}

KanPresentation from_action_orbits(const ActionDesc& d, OrbitVariant variant) {
  if (variant == OrbitVariant::kConjugation) return from_action_orbits(conjugation_action(d.monoid));
  check_action_respects_relations(d);
  KanPresentation kan;
  kan.ob_b.push_back(1);
  const ObjectId only = make_id<ObjectId>(0);
  ObjectId a = add_gamma_object(kan, 1, only);
  for (const auto& p : d.points) {
    if (label_taken(kan, p)) throw KanError("label '" + p + "' is used twice");
    kan.add_element(p, a);
  }
  for (const auto& row : d.images) add_gamma_arrow(kan, a, a, identity_at(only), images_of(kan, row));
  return checked(std::move(kan));
}

KanPresentation from_colimit_diagram(const ColimitDiagramDesc& d) {
  KanPresentation kan;
  kan.ob_b.push_back(1);
  const ObjectId only = make_id<ObjectId>(0);
  add_diagram(kan, d, [&](std::size_t) { return only; });
  if (d.functions.size() != d.arrows.size()) throw KanError("expected one function per arrow");
  for (std::size_t k = 0; k < d.arrows.size(); ++k) {
    auto src = kan.find_object_a(d.arrows[k].first);
    auto tgt = kan.find_object_a(d.arrows[k].second);
    if (!src || !tgt) throw KanError("arrow " + std::to_string(k) + " has an endpoint outside the diagram");
    add_gamma_arrow(kan, *src, *tgt, identity_at(only), images_of(kan, d.functions[k]));
  }
  return checked(std::move(kan));
}

KanPresentation from_induced_action(const InducedActionDesc& d) {
  KanPresentation kan;
  add_category_delta(kan, d.target);
  if (d.object_images.size() != d.action.objects.size()) throw KanError("expected one image per object");
  std::vector<ObjectId> images;
  for (int name : d.object_images) {
    auto o = kan.find_object_b(name);
    if (!o) throw KanError("object image " + std::to_string(name) + " is not an object of the target");
    images.push_back(*o);
  }
  add_diagram(kan, d.action, [&](std::size_t i) { return images[i]; });
  if (d.arrow_images.size() != d.action.arrows.size() || d.action.functions.size() != d.action.arrows.size()) {
    throw KanError("expected one image path and one function per arrow");
  }
  for (std::size_t k = 0; k < d.action.arrows.size(); ++k) {
    auto src = kan.find_object_a(d.action.arrows[k].first);
    auto tgt = kan.find_object_a(d.action.arrows[k].second);
    if (!src || !tgt) throw KanError("arrow " + std::to_string(k) + " has an endpoint outside the diagram");
    Path image = path_from_labels(kan, d.arrow_images[k], kan.f_ob_a[index_of(*src)]);
    add_gamma_arrow(kan, *src, *tgt, std::move(image), images_of(kan, d.action.functions[k]));
  }
  return checked(std::move(kan));
}

KanPresentation from_group_morphism(const GroupMorphismDesc& d) {
  InducedActionDesc induced;
  induced.action.objects = {1};
  induced.action.sets = {d.points};
  for (std::size_t g = 0; g < d.source_generators.size(); ++g) induced.action.arrows.emplace_back(1, 1);
  induced.action.functions = d.action;
  induced.target.objects = {1};
  for (const auto& g : d.target.generators) induced.target.arrows.push_back(ArrowDesc{g, 1, 1});
  induced.target.relations = d.target.relations;
  induced.object_images = {1};
  induced.arrow_images = d.images;
  return from_induced_action(induced);
}

}  // namespace kanbex
