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

#include "kanbex/presentation_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "kanbex/format.hpp"

namespace kanbex {

using nlohmann::json;

namespace {

constexpr auto kMissing = std::numeric_limits<std::uint32_t>::max();

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  if (!it->is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

std::string as_label(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a label string");
  return v.get<std::string>();
}

std::vector<std::string> as_word(const json& v, const std::string& where) {
  if (v.is_string()) return parse_word(v.get<std::string>());
  if (!v.is_array()) throw ParseError(where + ": expected a list of labels");
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(as_label(e, where));
  return out;
}

ObjectId lookup(const std::vector<int>& names, int name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return make_id<ObjectId>(i);
  }
  return ObjectId{kMissing};
}

// Builds the path without composability checks; the validator reports those.
Path raw_path(const KanPresentation& kan, const std::vector<std::string>& labels, ObjectId fallback,
              const std::string& where) {
  Path p{fallback, {}};
  for (const auto& l : labels) {
    auto id = kan.find_arrow(l);
    if (!id) throw ParseError(where + ": unknown arrow label '" + l + "'");
    if (p.arrows.empty()) p.source = kan.arrow(*id).src;
    p.arrows.push_back(*id);
  }
  return p;
}

bool is_identity_marker(const json& v) { return v.is_object() && v.contains("id"); }

Path relation_side(const KanPresentation& kan, const json& side, const json& other, const std::string& where) {
  if (is_identity_marker(side)) return Path{lookup(kan.ob_b, as_int(side.at("id"), where)), {}};
  auto labels = as_word(side, where);
  if (!labels.empty()) return raw_path(kan, labels, ObjectId{kMissing}, where);
  // Bare empty word: infer the object from the other side or a one-object Δ.
  if (!is_identity_marker(other)) {
    auto other_labels = as_word(other, where);
    if (!other_labels.empty()) {
      return Path{raw_path(kan, other_labels, ObjectId{kMissing}, where).source, {}};
    }
  }
  if (kan.ob_b.size() == 1) return Path{make_id<ObjectId>(0), {}};
  throw ParseError(where + ": identity path needs {\"id\": <object>}");
}

std::string at(const char* field, std::size_t i) { return std::string(field) + "[" + std::to_string(i) + "]"; }

}  // namespace

KanPresentation presentation_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("presentation must be a JSON object");
  KanPresentation kan;
  for (const auto& v : field(doc, "ObA")) kan.ob_a.push_back(as_int(v, "ObA"));
  const auto& arr_a = field(doc, "ArrA");
  for (std::size_t i = 0; i < arr_a.size(); ++i) {
    const auto& a = arr_a[i];
    if (!a.is_array() || a.size() != 2) throw ParseError(at("ArrA", i) + ": expected [src, tgt]");
    kan.arr_a.push_back(GammaArrow{lookup(kan.ob_a, as_int(a[0], at("ArrA", i))),
                                   lookup(kan.ob_a, as_int(a[1], at("ArrA", i)))});
  }
  for (const auto& v : field(doc, "ObB")) kan.ob_b.push_back(as_int(v, "ObB"));
  const auto& arr_b = field(doc, "ArrB");
  for (std::size_t i = 0; i < arr_b.size(); ++i) {
    const auto& a = arr_b[i];
    if (!a.is_array() || a.size() != 3) throw ParseError(at("ArrB", i) + ": expected [label, src, tgt]");
    kan.arr_b.push_back(LabelledArrow{as_label(a[0], at("ArrB", i)), lookup(kan.ob_b, as_int(a[1], at("ArrB", i))),
                                      lookup(kan.ob_b, as_int(a[2], at("ArrB", i)))});
  }
  const auto& rel_b = field(doc, "RelB");
  for (std::size_t i = 0; i < rel_b.size(); ++i) {
    const auto& r = rel_b[i];
    if (!r.is_array() || r.size() != 2) throw ParseError(at("RelB", i) + ": expected a pair of paths");
    kan.rel_b.emplace_back(relation_side(kan, r[0], r[1], at("RelB", i)),
                           relation_side(kan, r[1], r[0], at("RelB", i)));
  }
  for (const auto& v : field(doc, "FObA")) kan.f_ob_a.push_back(lookup(kan.ob_b, as_int(v, "FObA")));

  const auto& x_ob_a = field(doc, "XObA");
  for (std::size_t i = 0; i < x_ob_a.size(); ++i) {
    kan.x_ob_a.emplace_back();
    for (auto& label : as_word(x_ob_a[i], at("XObA", i))) {
      kan.add_element(std::move(label), make_id<ObjectId>(i));
    }
  }
  const auto& f_arr_a = field(doc, "FArrA");
  for (std::size_t k = 0; k < f_arr_a.size(); ++k) {
    ObjectId fallback{kMissing};
    if (k < kan.arr_a.size() && index_of(kan.arr_a[k].src) < kan.f_ob_a.size()) {
      fallback = kan.f_ob_a[index_of(kan.arr_a[k].src)];
    }
    kan.f_arr_a.push_back(raw_path(kan, as_word(f_arr_a[k], at("FArrA", k)), fallback, at("FArrA", k)));
  }
  const auto& x_arr_a = field(doc, "XArrA");
  for (std::size_t k = 0; k < x_arr_a.size(); ++k) {
    kan.x_arr_a.emplace_back();
    for (const auto& label : as_word(x_arr_a[k], at("XArrA", k))) {
      auto id = kan.find_element(label);
      if (!id) throw ParseError(at("XArrA", k) + ": unknown X-element '" + label + "'");
      kan.x_arr_a.back().push_back(*id);
    }
  }
  return kan;
}

json presentation_to_json(const KanPresentation& kan) {
  auto name_b = [&](ObjectId o) { return kan.ob_b.at(index_of(o)); };
  auto word = [&](const Path& p) {
    json w = json::array();
    for (const auto& l : path_labels(kan, p)) w.push_back(l);
    return w;
  };
  json doc;
  doc["ObA"] = kan.ob_a;
  doc["ArrA"] = json::array();
  for (const auto& a : kan.arr_a) doc["ArrA"].push_back({kan.ob_a.at(index_of(a.src)), kan.ob_a.at(index_of(a.tgt))});
  doc["ObB"] = kan.ob_b;
  doc["ArrB"] = json::array();
  for (const auto& a : kan.arr_b) doc["ArrB"].push_back({a.label, name_b(a.src), name_b(a.tgt)});
  doc["RelB"] = json::array();
  for (const auto& [l, r] : kan.rel_b) {
    auto side = [&](const Path& p) { return p.is_identity() ? json{{"id", name_b(p.source)}} : word(p); };
    doc["RelB"].push_back({side(l), side(r)});
  }
  doc["FObA"] = json::array();
  for (ObjectId o : kan.f_ob_a) doc["FObA"].push_back(name_b(o));
  doc["FArrA"] = json::array();
  for (const auto& p : kan.f_arr_a) doc["FArrA"].push_back(word(p));
  doc["XObA"] = json::array();
  for (const auto& xs : kan.x_ob_a) {
    json set = json::array();
    for (ElementId x : xs) set.push_back(kan.element(x).label);
    doc["XObA"].push_back(std::move(set));
  }
  doc["XArrA"] = json::array();
  for (const auto& xs : kan.x_arr_a) {
    json images = json::array();
    for (ElementId x : xs) images.push_back(kan.element(x).label);
    doc["XArrA"].push_back(std::move(images));
  }
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace kanbex
