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

#include "kanbex/kan_eval.hpp"

#include <algorithm>

namespace kanbex {

KanTables enumerate(const KanPresentation& kan, const RewriteSystem& rules, const OrderSpec& spec,
                    std::size_t limit) {
  if (limit == 0) throw KanError("enumeration limit must be positive");
  if (!check_confluence(rules)) throw KanError("rewrite system is not confluent; normal forms are undefined");

  KanTables tables;
  tables.elements.resize(kan.ob_b.size());

  std::vector<ElementId> tags(kan.elements.size());
  for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = make_id<ElementId>(i);
  std::stable_sort(tags.begin(), tags.end(), [&](ElementId a, ElementId b) {
    return spec.element_rank[index_of(a)] < spec.element_rank[index_of(b)];
  });
  std::vector<ArrowId> arrows(kan.arr_b.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) arrows[i] = make_id<ArrowId>(i);
  std::stable_sort(arrows.begin(), arrows.end(), [&](ArrowId a, ArrowId b) {
    return spec.arrow_rank[index_of(a)] < spec.arrow_rank[index_of(b)];
  });

  auto record = [&](Term t) {
    if (tables.total == limit) {
      tables.status = EnumerationStatus::kLimitExceeded;
      return false;
    }
    tables.elements[index_of(kan.tau(t))].push_back(t);
    ++tables.total;
    return true;
  };

  std::vector<Term> stage;
  for (ElementId x : tags) {
    Term t = kan.identity_term(x);
    if (!is_irreducible(t, rules)) continue;
    if (!record(t)) return tables;
    stage.push_back(std::move(t));
  }
  while (!stage.empty()) {
    ++tables.stages;
    std::vector<Term> next;
    for (const Term& s : stage) {
      const ObjectId end = kan.tau(s);
      for (ArrowId b : arrows) {
        if (kan.arrow(b).src != end) continue;
        Term t = s;
        t.path.arrows.push_back(b);
        if (!is_irreducible(t, rules)) continue;
        if (!record(t)) return tables;
        next.push_back(std::move(t));
      }
    }
    stage = std::move(next);
  }
  return tables;
}

ObjectId tau_bar(const KanPresentation& kan, const Term& normal_form) { return kan.tau(normal_form); }

Term act(const KanPresentation& kan, const Term& normal_form, const Path& q, const RewriteSystem& rules) {
  if (q.source != kan.tau(normal_form)) throw ActionError("path does not start at the target of the element");
  return reduce_term(act_unchecked(normal_form, q), rules);
}

Term epsilon(const KanPresentation& kan, ElementId x, const RewriteSystem& rules) {
  if (index_of(x) >= kan.elements.size()) throw KanError("unknown X-element");
  return reduce_term(kan.identity_term(x), rules);
}

bool naturality_check(const KanPresentation& kan, const RewriteSystem& rules) {
  for (std::size_t k = 0; k < kan.arr_a.size(); ++k) {
    const auto& xs = kan.x_ob_a[index_of(kan.arr_a[k].src)];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Term lhs = act(kan, epsilon(kan, xs[j], rules), kan.f_arr_a[k], rules);
      if (lhs != epsilon(kan, kan.x_arr_a[k][j], rules)) return false;
    }
  }
  return true;
}

}  // namespace kanbex
