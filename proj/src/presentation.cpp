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

#include "kanbex/presentation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace kanbex {

Path concat(const Path& p, const Path& q) {
  Path out{p.source, p.arrows};
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

Term act_unchecked(const Term& t, const Path& q) { return Term{t.tag, concat(t.path, q)}; }

std::optional<ArrowId> KanPresentation::find_arrow(std::string_view label) const {
  for (std::size_t i = 0; i < arr_b.size(); ++i) {
    if (arr_b[i].label == label) return make_id<ArrowId>(i);
  }
  return std::nullopt;
}

std::optional<ElementId> KanPresentation::find_element(std::string_view label) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].label == label) return make_id<ElementId>(i);
  }
  return std::nullopt;
}

std::optional<ObjectId> KanPresentation::find_object_b(int name) const {
  auto it = std::find(ob_b.begin(), ob_b.end(), name);
  if (it == ob_b.end()) return std::nullopt;
  return make_id<ObjectId>(static_cast<std::size_t>(it - ob_b.begin()));
}

std::optional<ObjectId> KanPresentation::find_object_a(int name) const {
  auto it = std::find(ob_a.begin(), ob_a.end(), name);
  if (it == ob_a.end()) return std::nullopt;
  return make_id<ObjectId>(static_cast<std::size_t>(it - ob_a.begin()));
}

ObjectId KanPresentation::target(const Path& p) const {
  if (p.is_identity()) return p.source;
  return arrow(p.arrows.back()).tgt;
}

ObjectId KanPresentation::term_source(ElementId x) const {
  return f_ob_a.at(index_of(element(x).owner));
}

Term KanPresentation::identity_term(ElementId x) const { return Term{x, Path{term_source(x), {}}}; }

ElementId KanPresentation::add_element(std::string label, ObjectId owner) {
  auto id = make_id<ElementId>(elements.size());
  elements.push_back(Element{std::move(label), owner});
  x_ob_a.at(index_of(owner)).push_back(id);
  return id;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.field << "[" << v.index << "]: " << v.message << "\n";
  }
  return out.str();
}

bool is_valid_path(const KanPresentation& kan, const Path& p) {
  if (index_of(p.source) >= kan.ob_b.size()) return false;
  ObjectId at = p.source;
  for (ArrowId a : p.arrows) {
    if (index_of(a) >= kan.arr_b.size()) return false;
    const auto& arrow = kan.arrow(a);
    if (arrow.src != at) return false;
    at = arrow.tgt;
  }
  return true;
}

namespace {

class Checker {
 public:
  explicit Checker(const KanPresentation& p) : p_(p) {}

  ValidationReport run() {
    check_gamma();
    check_delta();
    check_labels();
    check_relations();
    check_functor();
    check_action();
    return std::move(report_);
  }

 private:
  void fail(std::string field, std::size_t index, std::string message) {
    report_.violations.push_back(Violation{std::move(field), index, std::move(message)});
  }

  bool in_a(ObjectId o) const { return index_of(o) < p_.ob_a.size(); }
  bool in_b(ObjectId o) const { return index_of(o) < p_.ob_b.size(); }

  void check_gamma() {
    for (std::size_t k = 0; k < p_.arr_a.size(); ++k) {
      if (!in_a(p_.arr_a[k].src) || !in_a(p_.arr_a[k].tgt)) {
        fail("ArrA", k, "endpoint is not a listed object of Γ");
      }
    }
    check_distinct_names("ObA", p_.ob_a);
  }

  void check_delta() {
    for (std::size_t k = 0; k < p_.arr_b.size(); ++k) {
      const auto& a = p_.arr_b[k];
      if (a.label.empty()) fail("ArrB", k, "empty arrow label");
      if (!in_b(a.src) || !in_b(a.tgt)) fail("ArrB", k, "endpoint is not a listed object of Δ");
    }
    check_distinct_names("ObB", p_.ob_b);
  }

  void check_distinct_names(const char* field, const std::vector<int>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) fail(field, i, "duplicate object " + std::to_string(names[i]));
      }
    }
  }

  // Δ-arrow labels and X-element labels share one namespace.
  void check_labels() {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t k = 0; k < p_.arr_b.size(); ++k) {
      if (!seen.emplace(p_.arr_b[k].label, k).second) {
        fail("ArrB", k, "duplicate label '" + p_.arr_b[k].label + "'");
      }
    }
    for (std::size_t e = 0; e < p_.elements.size(); ++e) {
      const auto& el = p_.elements[e];
      if (el.label.empty()) fail("XObA", e, "empty element label");
      if (!seen.emplace(el.label, e).second) {
        fail("XObA", e, "label '" + el.label + "' collides with another label");
      }
      if (!in_a(el.owner)) fail("XObA", e, "element owned by an unknown object");
    }
    if (p_.x_ob_a.size() != p_.ob_a.size()) {
      fail("XObA", p_.x_ob_a.size(), "expected one set per object of Γ");
    }
    for (std::size_t i = 0; i < p_.x_ob_a.size(); ++i) {
      for (ElementId x : p_.x_ob_a[i]) {
        if (index_of(x) >= p_.elements.size() || index_of(p_.element(x).owner) != i) {
          fail("XObA", i, "entry does not belong to this object");
        }
      }
    }
  }

  void check_relations() {
    for (std::size_t k = 0; k < p_.rel_b.size(); ++k) {
      const auto& [l, r] = p_.rel_b[k];
      if (!is_valid_path(p_, l) || !is_valid_path(p_, r)) {
        fail("RelB", k, "side is not a composable path");
        continue;
      }
      if (l.source != r.source || p_.target(l) != p_.target(r)) {
        fail("RelB", k, "sides are not parallel");
      }
    }
  }

  void check_functor() {
    if (p_.f_ob_a.size() != p_.ob_a.size()) {
      fail("FObA", p_.f_ob_a.size(), "expected one image per object of Γ");
    }
    for (std::size_t i = 0; i < p_.f_ob_a.size(); ++i) {
      if (!in_b(p_.f_ob_a[i])) fail("FObA", i, "image is not an object of Δ");
    }
    if (p_.f_arr_a.size() != p_.arr_a.size()) {
      fail("FArrA", p_.f_arr_a.size(), "expected one image per arrow of Γ");
      return;
    }
    for (std::size_t k = 0; k < p_.f_arr_a.size(); ++k) {
      const Path& fa = p_.f_arr_a[k];
      const auto& a = p_.arr_a[k];
      if (!in_a(a.src) || !in_a(a.tgt) || index_of(a.src) >= p_.f_ob_a.size() ||
          index_of(a.tgt) >= p_.f_ob_a.size()) {
        continue;
      }
      if (!is_valid_path(p_, fa)) {
        fail("FArrA", k, "image is not a composable path");
        continue;
      }
      if (fa.source != p_.f_ob_a[index_of(a.src)]) {
        fail("FArrA", k, "image does not start at F(src)");
      } else if (p_.target(fa) != p_.f_ob_a[index_of(a.tgt)]) {
        fail("FArrA", k, "image does not end at F(tgt)");
      }
    }
  }

  void check_action() {
    if (p_.x_arr_a.size() != p_.arr_a.size()) {
      fail("XArrA", p_.x_arr_a.size(), "expected one image list per arrow of Γ");
      return;
    }
    for (std::size_t k = 0; k < p_.x_arr_a.size(); ++k) {
      const auto& a = p_.arr_a[k];
      if (index_of(a.src) >= p_.x_ob_a.size() || index_of(a.tgt) >= p_.x_ob_a.size()) continue;
      const auto& from = p_.x_ob_a[index_of(a.src)];
      const auto& to = p_.x_ob_a[index_of(a.tgt)];
      if (p_.x_arr_a[k].size() != from.size()) {
        fail("XArrA", k, "image list length differs from |X(src)|");
      }
      for (ElementId y : p_.x_arr_a[k]) {
        if (std::find(to.begin(), to.end(), y) == to.end()) {
          fail("XArrA", k, "image is not an element of X(tgt)");
          break;
        }
      }
    }
  }

  const KanPresentation& p_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_presentation(const KanPresentation& p) { return Checker(p).run(); }

Path compose_paths(const KanPresentation& kan, const Path& p, const Path& q) {
  if (kan.target(p) != q.source) {
    throw CompositionError("cannot compose: target of first path is not the source of the second");
  }
  return concat(p, q);
}

Path path_from_labels(const KanPresentation& kan, const std::vector<std::string>& labels,
                      std::optional<ObjectId> source) {
  if (labels.empty()) {
    if (!source) throw ParseError("identity path needs an explicit source object");
    return Path{*source, {}};
  }
  Path p;
  for (const auto& label : labels) {
    auto id = kan.find_arrow(label);
    if (!id) throw ParseError("unknown arrow label '" + label + "'");
    const auto& arrow = kan.arrow(*id);
    if (p.arrows.empty()) {
      p.source = arrow.src;
      if (source && *source != arrow.src) {
        throw ParseError("path starting with '" + label + "' does not leave the expected object");
      }
    } else if (kan.arrow(p.arrows.back()).tgt != arrow.src) {
      throw ParseError("arrow '" + label + "' is not composable with its predecessor");
    }
    p.arrows.push_back(*id);
  }
  return p;
}

std::vector<std::string> path_labels(const KanPresentation& kan, const Path& p) {
  std::vector<std::string> out;
  out.reserve(p.arrows.size());
  for (ArrowId a : p.arrows) out.push_back(kan.arrow(a).label);
  return out;
}

std::vector<std::string> term_as_list(const KanPresentation& kan, const Term& t) {
  std::vector<std::string> out{kan.element(t.tag).label};
  for (ArrowId a : t.path.arrows) out.push_back(kan.arrow(a).label);
  return out;
}

Term list_as_term(const std::vector<std::string>& labels, const KanPresentation& kan) {
  if (labels.empty()) throw ParseError("empty term list");
  auto tag = kan.find_element(labels.front());
  if (!tag) throw ParseError("'" + labels.front() + "' is not an X-element");
  std::vector<std::string> rest(labels.begin() + 1, labels.end());
  return Term{*tag, path_from_labels(kan, rest, kan.term_source(*tag))};
}

}  // namespace kanbex
