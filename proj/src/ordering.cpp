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

#include "kanbex/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace kanbex {

namespace {

std::vector<std::uint32_t> identity_ranks(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 0U);
  return r;
}

template <typename Lookup>
std::vector<std::uint32_t> ranks_from(const std::vector<std::string>& labels, std::size_t n,
                                      const char* what, Lookup lookup) {
  if (labels.empty()) return identity_ranks(n);
  if (labels.size() != n) {
    throw KanError(std::string(what) + " order must list all " + std::to_string(n) + " labels");
  }
  std::vector<std::uint32_t> rank(n, UINT32_MAX);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto id = lookup(labels[i]);
    if (!id) throw KanError(std::string(what) + " order names unknown label '" + labels[i] + "'");
    auto& slot = rank[index_of(*id)];
    if (slot != UINT32_MAX) throw KanError(std::string(what) + " order repeats '" + labels[i] + "'");
    slot = static_cast<std::uint32_t>(i);
  }
  return rank;
}

}  // namespace

OrderSpec OrderSpec::declaration(const KanPresentation& kan) {
  return OrderSpec{identity_ranks(kan.elements.size()), identity_ranks(kan.arr_b.size())};
}

OrderSpec OrderSpec::from_labels(const KanPresentation& kan, const std::vector<std::string>& x_order,
                                 const std::vector<std::string>& delta_order) {
  OrderSpec spec;
  spec.element_rank = ranks_from(x_order, kan.elements.size(), "X-element",
                                 [&](const std::string& l) { return kan.find_element(l); });
  spec.arrow_rank = ranks_from(delta_order, kan.arr_b.size(), "Δ-arrow",
                               [&](const std::string& l) { return kan.find_arrow(l); });
  return spec;
}

std::strong_ordering LengthLexOrdering::compare_arrows(const std::vector<ArrowId>& a,
                                                       const std::vector<ArrowId>& b) const {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return spec_.arrow_rank[index_of(a[i])] <=> spec_.arrow_rank[index_of(b[i])];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering LengthLexOrdering::compare(const Path& p, const Path& q) const {
  if (auto c = compare_arrows(p.arrows, q.arrows); c != 0) return c;
  // Only identities at different objects reach here with distinct paths.
  return index_of(p.source) <=> index_of(q.source);
}

std::strong_ordering LengthLexOrdering::compare(const Term& s, const Term& t) const {
  if (auto c = s.length() <=> t.length(); c != 0) return c;
  if (s.tag != t.tag) return spec_.element_rank[index_of(s.tag)] <=> spec_.element_rank[index_of(t.tag)];
  return compare_arrows(s.path.arrows, t.path.arrows);
}

std::unique_ptr<Ordering> make_ordering(std::string_view name, OrderSpec spec) {
  if (name == "lenlex") return std::make_unique<LengthLexOrdering>(std::move(spec));
  throw KanError("unknown ordering '" + std::string(name) + "' (only lenlex is available)");
}

std::optional<std::pair<Side, Side>> orient_pair(const Side& a, const Side& b, const Ordering& order) {
  if (a.index() != b.index()) throw KanError("cannot orient a term against a path");
  return std::visit(
      [&](const auto& lhs) -> std::optional<std::pair<Side, Side>> {
        using T = std::decay_t<decltype(lhs)>;
        auto o = orient(lhs, std::get<T>(b), order);
        if (!o) return std::nullopt;
        return std::pair<Side, Side>{o->greater, o->lesser};
      },
      a);
}

}  // namespace kanbex
