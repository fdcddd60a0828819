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
#include "kanbex/format.hpp"

namespace kanbex {

using nlohmann::json;

namespace {

const json& need(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("descriptor is missing '") + name + "'");
  return *it;
}

std::vector<std::string> labels(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Word word(const json& v) {
  if (v.is_string()) return parse_word(v.get<std::string>());
  return labels(v, "word");
}

std::vector<Word> words(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of words");
  std::vector<Word> out;
  for (const auto& w : v) out.push_back(word(w));
  return out;
}

std::vector<WordPair> relations(const json& doc) {
  std::vector<WordPair> out;
  if (!doc.contains("relations")) return out;
  for (const auto& r : doc.at("relations")) {
    if (!r.is_array() || r.size() != 2) throw ParseError("relation must be a pair of words");
    out.emplace_back(word(r[0]), word(r[1]));
  }
  return out;
}

std::vector<int> ints(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string(what) + " must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

MonoidPresentationDesc monoid(const json& doc) {
  return MonoidPresentationDesc{labels(need(doc, "generators"), "generators"), relations(doc)};
}

std::string tag_or(const json& doc, const char* fallback) {
  return doc.contains("tag") ? doc.at("tag").get<std::string>() : std::string(fallback);
}

// {"a": [...], "b": [...]} keyed by generator, in generator order.
std::vector<std::vector<std::string>> per_generator(const json& v, const std::vector<std::string>& gens,
                                                    const char* what) {
  if (!v.is_object()) throw ParseError(std::string(what) + " must map generators to lists");
  std::vector<std::vector<std::string>> out;
  for (const auto& g : gens) {
    if (!v.contains(g)) throw ParseError(std::string(what) + " has no entry for '" + g + "'");
    out.push_back(labels(v.at(g), what));
  }
  return out;
}

ActionDesc action(const json& doc) {
  ActionDesc d;
  d.monoid = monoid(doc);
  if (doc.contains("points")) d.points = labels(doc.at("points"), "points");
  if (doc.contains("images")) d.images = per_generator(doc.at("images"), d.monoid.generators, "images");
  return d;
}

ColimitDiagramDesc diagram(const json& doc) {
  ColimitDiagramDesc d;
  d.objects = ints(need(doc, "objects"), "objects");
  for (const auto& a : need(doc, "arrows")) {
    if (!a.is_array() || a.size() != 2) throw ParseError("diagram arrow must be [src, tgt]");
    d.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  for (const auto& s : need(doc, "sets")) d.sets.push_back(labels(s, "sets"));
  for (const auto& f : need(doc, "functions")) d.functions.push_back(labels(f, "functions"));
  return d;
}

CategoryDesc category(const json& doc) {
  CategoryDesc d;
  d.objects = ints(need(doc, "objects"), "objects");
  for (const auto& a : need(doc, "arrows")) {
    if (!a.is_array() || a.size() != 3) throw ParseError("category arrow must be [label, src, tgt]");
    d.arrows.push_back(ArrowDesc{a[0].get<std::string>(), a[1].get<int>(), a[2].get<int>()});
  }
  d.relations = relations(doc);
  return d;
}

}  // namespace

KanPresentation encode_from_json(std::string_view kind, const json& doc) {
  if (!doc.is_object()) throw ParseError("descriptor must be a JSON object");
  try {
    if (kind == "monoid") return from_monoid_presentation(monoid(doc), tag_or(doc, "e"));
    if (kind == "category") return from_category_presentation(category(doc));
    if (kind == "cosets") {
      return from_coset_system(CosetSystemDesc{monoid(doc), words(need(doc, "subgroup")), tag_or(doc, "H")});
    }
    if (kind == "congruence") {
      return from_right_congruence(monoid(doc), words(need(doc, "congruence")), tag_or(doc, "H"));
    }
    if (kind == "quotient") {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& p : need(doc, "pairs")) {
        auto two = labels(p, "pairs");
        if (two.size() != 2) throw ParseError("quotient pair must have two points");
        pairs.emplace_back(two[0], two[1]);
      }
      std::optional<ActionDesc> act;
      if (doc.contains("action")) {
        act = action(doc.at("action"));
        act->points = labels(need(doc, "points"), "points");
      }
      return from_relation_quotient(labels(need(doc, "points"), "points"), pairs, act);
    }
    if (kind == "orbits") {
      const std::string variant = doc.value("variant", std::string("plain"));
      if (variant != "plain" && variant != "conjugation") throw ParseError("variant must be plain or conjugation");
      return from_action_orbits(action(doc),
                                variant == "plain" ? OrbitVariant::kPlain : OrbitVariant::kConjugation);
    }
    if (kind == "colimit") return from_colimit_diagram(diagram(doc));
    if (kind == "induced") {
      GroupMorphismDesc d;
      d.source_generators = labels(need(doc, "source_generators"), "source_generators");
      d.target = monoid(doc);
      const auto& images = need(doc, "images");
      for (const auto& g : d.source_generators) {
        if (!images.contains(g)) throw ParseError("images has no entry for '" + g + "'");
        d.images.push_back(word(images.at(g)));
      }
      d.points = labels(need(doc, "points"), "points");
      d.action = per_generator(need(doc, "action"), d.source_generators, "action");
      return from_group_morphism(d);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad descriptor: ") + e.what());
  }
  throw ParseError("unknown encoding '" + std::string(kind) + "'");
}

}  // namespace kanbex
