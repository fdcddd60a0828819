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

#include "kanbex/rewrite.hpp"

#include <algorithm>

namespace kanbex {

namespace {

using Arrows = std::vector<ArrowId>;

bool matches_at(const Arrows& word, std::size_t pos, const Arrows& pattern) {
  if (pattern.empty() || pos + pattern.size() > word.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), word.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool ends_with(const Arrows& word, const Arrows& pattern) {
  return !pattern.empty() && pattern.size() <= word.size() &&
         matches_at(word, word.size() - pattern.size(), pattern);
}

bool is_prefix(const Arrows& prefix, const Arrows& word) {
  return prefix.size() <= word.size() && std::equal(prefix.begin(), prefix.end(), word.begin());
}

Arrows slice(const Arrows& w, std::size_t from, std::size_t to) {
  return Arrows(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

Arrows join(std::initializer_list<const Arrows*> parts) {
  Arrows out;
  for (const Arrows* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

struct AllRules {
  bool operator()(RuleKind, std::size_t) const noexcept { return true; }
};

// Pushes the arrows of `w` onto a pending stack so that w[0] is popped first.
void push_pending(Arrows& pending, const Arrows& w) { pending.insert(pending.end(), w.rbegin(), w.rend()); }

// Reduces the word `out ++ reverse(pending)` in place. `out` must be
// irreducible under path rules on entry. Innermost-leftmost: every new redex
// ends at the symbol just shifted onto `out`.
template <typename Alive>
bool apply_path_suffix(Arrows& out, Arrows& pending, std::span<const PathRule> rules, const Alive& alive) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!alive(RuleKind::kPath, i)) continue;
    const auto& r = rules[i];
    if (ends_with(out, r.lhs.arrows)) {
      out.resize(out.size() - r.lhs.arrows.size());
      push_pending(pending, r.rhs.arrows);
      return true;
    }
  }
  return false;
}

template <typename Alive>
Path reduce_path_impl(Path p, std::span<const PathRule> rules, const Alive& alive) {
  Arrows out;
  Arrows pending;
  push_pending(pending, p.arrows);
  out.reserve(p.arrows.size());
  while (true) {
    if (apply_path_suffix(out, pending, rules, alive)) continue;
    if (pending.empty()) break;
    out.push_back(pending.back());
    pending.pop_back();
  }
  p.arrows = std::move(out);
  return p;
}

template <typename Alive>
Term reduce_term_impl(Term t, const RewriteSystem& rules, const Alive& alive) {
  Arrows out;
  Arrows pending;
  push_pending(pending, t.path.arrows);
  auto try_apply = [&]() {
    for (std::size_t i = 0; i < rules.term_rules.size(); ++i) {
      if (!alive(RuleKind::kTerm, i)) continue;
      const auto& r = rules.term_rules[i];
      if (r.lhs.tag == t.tag && r.lhs.path.arrows == out) {
        t.tag = r.rhs.tag;
        t.path.source = r.rhs.path.source;
        out.clear();
        push_pending(pending, r.rhs.path.arrows);
        return true;
      }
    }
    return apply_path_suffix(out, pending, rules.path_rules, alive);
  };
  while (true) {
    if (try_apply()) continue;
    if (pending.empty()) break;
    out.push_back(pending.back());
    pending.pop_back();
  }
  t.path.arrows = std::move(out);
  return t;
}

template <typename Alive>
bool path_reducible(const Arrows& w, std::span<const PathRule> rules, const Alive& alive) {
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!alive(RuleKind::kPath, i)) continue;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (matches_at(w, pos, rules[i].lhs.arrows)) return true;
    }
  }
  return false;
}

template <typename Alive>
bool term_reducible(const Term& t, const RewriteSystem& rules, const Alive& alive) {
  for (std::size_t i = 0; i < rules.term_rules.size(); ++i) {
    if (!alive(RuleKind::kTerm, i)) continue;
    const auto& lhs = rules.term_rules[i].lhs;
    if (lhs.tag == t.tag && is_prefix(lhs.path.arrows, t.path.arrows)) return true;
  }
  return path_reducible(t.path.arrows, rules.path_rules, alive);
}

template <typename T>
void push_unique(std::vector<T>& rules, T rule) {
  if (std::find(rules.begin(), rules.end(), rule) == rules.end()) rules.push_back(std::move(rule));
}

void add_oriented(RewriteSystem& rules, const Term& a, const Term& b, const Ordering& order) {
  if (auto o = orient(a, b, order)) push_unique(rules.term_rules, TermRule{o->greater, o->lesser});
}

void add_oriented(RewriteSystem& rules, const Path& a, const Path& b, const Ordering& order) {
  if (auto o = orient(a, b, order)) push_unique(rules.path_rules, PathRule{o->greater, o->lesser});
}

}  // namespace

RewriteSystem initial_rules(const KanPresentation& kan, const Ordering& order) {
  if (auto report = validate_presentation(kan); !report.ok()) {
    throw KanError("invalid presentation:\n" + report.to_string());
  }
  RewriteSystem rules;
  for (std::size_t k = 0; k < kan.arr_a.size(); ++k) {
    const auto& xs = kan.x_ob_a[index_of(kan.arr_a[k].src)];
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Term lhs{xs[j], kan.f_arr_a[k]};
      add_oriented(rules, lhs, kan.identity_term(kan.x_arr_a[k][j]), order);
    }
  }
  for (const auto& [l, r] : kan.rel_b) add_oriented(rules, l, r, order);
  return rules;
}

std::optional<Path> rewrite_once(const Path& p, std::span<const PathRule> rules) {
  for (std::size_t pos = 0; pos < p.arrows.size(); ++pos) {
    for (const auto& r : rules) {
      if (!matches_at(p.arrows, pos, r.lhs.arrows)) continue;
      Path out{p.source, slice(p.arrows, 0, pos)};
      out.arrows.insert(out.arrows.end(), r.rhs.arrows.begin(), r.rhs.arrows.end());
      out.arrows.insert(out.arrows.end(), p.arrows.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.arrows.size()),
                        p.arrows.end());
      return out;
    }
  }
  return std::nullopt;
}

std::optional<Term> rewrite_once(const Term& t, const RewriteSystem& rules) {
  for (const auto& r : rules.term_rules) {
    if (r.lhs.tag == t.tag && is_prefix(r.lhs.path.arrows, t.path.arrows)) {
      Term out = r.rhs;
      out.path.arrows.insert(out.path.arrows.end(),
                             t.path.arrows.begin() + static_cast<std::ptrdiff_t>(r.lhs.path.arrows.size()),
                             t.path.arrows.end());
      return out;
    }
  }
  if (auto p = rewrite_once(t.path, rules.path_rules)) return Term{t.tag, std::move(*p)};
  return std::nullopt;
}

Path reduce_path(Path p, std::span<const PathRule> rules) { return reduce_path_impl(std::move(p), rules, AllRules{}); }

Term reduce_term(Term t, const RewriteSystem& rules) { return reduce_term_impl(std::move(t), rules, AllRules{}); }

bool is_irreducible(const Path& p, std::span<const PathRule> rules) {
  return !path_reducible(p.arrows, rules, AllRules{});
}

bool is_irreducible(const Term& t, const RewriteSystem& rules) { return !term_reducible(t, rules, AllRules{}); }

const char* overlap_name(OverlapCase c) noexcept {
  switch (c) {
    case OverlapCase::kTermPrefix:
      return "term-prefix";
    case OverlapCase::kPathInPath:
      return "path-in-path";
    case OverlapCase::kPathSuffix:
      return "path-suffix-prefix";
    case OverlapCase::kTermPathSuffix:
      return "term-path-suffix";
    case OverlapCase::kTermHasPath:
      return "term-contains-path";
  }
  return "?";
}

std::vector<CriticalPair> find_critical_pairs(const RewriteSystem& rules) {
  std::vector<CriticalPair> out;
  const auto& tr = rules.term_rules;
  const auto& pr = rules.path_rules;
  auto emit_terms = [&](Term a, Term b, OverlapCase c, RuleRef r1, RuleRef r2) {
    if (a == b) return;
    out.push_back(CriticalPair{std::pair<Term, Term>{std::move(a), std::move(b)}, c, r1, r2});
  };
  auto emit_paths = [&](Path a, Path b, OverlapCase c, RuleRef r1, RuleRef r2) {
    if (a == b) return;
    out.push_back(CriticalPair{std::pair<Path, Path>{std::move(a), std::move(b)}, c, r1, r2});
  };

  // (ii) and (iii): path rule against path rule.
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const Arrows& l1 = pr[i].lhs.arrows;
    const RuleRef r1{RuleKind::kPath, i};
    for (std::size_t j = 0; j < pr.size(); ++j) {
      const Arrows& l2 = pr[j].lhs.arrows;
      const RuleRef r2{RuleKind::kPath, j};
      for (std::size_t pos = 0; l2.size() <= l1.size() && pos + l2.size() <= l1.size(); ++pos) {
        if (i == j && pos == 0) continue;
        if (!matches_at(l1, pos, l2)) continue;
        Arrows p = slice(l1, 0, pos);
        Arrows q = slice(l1, pos + l2.size(), l1.size());
        emit_paths(pr[i].rhs, Path{pr[i].lhs.source, join({&p, &pr[j].rhs.arrows, &q})}, OverlapCase::kPathInPath,
                   r1, r2);
      }
      const std::size_t max_k = std::min(l1.size(), l2.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
        Arrows u = slice(l1, 0, l1.size() - k);
        Arrows v = slice(l2, k, l2.size());
        emit_paths(Path{pr[i].rhs.source, join({&pr[i].rhs.arrows, &v})},
                   Path{pr[i].lhs.source, join({&u, &pr[j].rhs.arrows})}, OverlapCase::kPathSuffix, r1, r2);
      }
    }
  }

  // (i): term rule against term rule.
  for (std::size_t i = 0; i < tr.size(); ++i) {
    for (std::size_t j = 0; j < tr.size(); ++j) {
      if (i == j) continue;
      const Term& s1 = tr[i].lhs;
      const Term& s2 = tr[j].lhs;
      if (s1.tag != s2.tag || !is_prefix(s1.path.arrows, s2.path.arrows)) continue;
      Arrows q = slice(s2.path.arrows, s1.path.arrows.size(), s2.path.arrows.size());
      Term u1q = tr[i].rhs;
      u1q.path.arrows.insert(u1q.path.arrows.end(), q.begin(), q.end());
      emit_terms(std::move(u1q), tr[j].rhs, OverlapCase::kTermPrefix, RuleRef{RuleKind::kTerm, i},
                 RuleRef{RuleKind::kTerm, j});
    }
  }

  // (iv) and (v): term rule against path rule.
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const Term& s1 = tr[i].lhs;
    const Arrows& w = s1.path.arrows;
    const RuleRef r1{RuleKind::kTerm, i};
    for (std::size_t j = 0; j < pr.size(); ++j) {
      const Arrows& l = pr[j].lhs.arrows;
      const RuleRef r2{RuleKind::kPath, j};
      for (std::size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
        if (!matches_at(w, pos, l)) continue;
        Arrows s = slice(w, 0, pos);
        Arrows q = slice(w, pos + l.size(), w.size());
        emit_terms(tr[i].rhs, Term{s1.tag, Path{s1.path.source, join({&s, &pr[j].rhs.arrows, &q})}},
                   OverlapCase::kTermHasPath, r1, r2);
      }
      const std::size_t max_k = std::min(w.size() + 1, l.size());
      for (std::size_t k = 1; k < max_k; ++k) {
        if (!std::equal(w.end() - static_cast<std::ptrdiff_t>(k), w.end(), l.begin())) continue;
        Arrows s = slice(w, 0, w.size() - k);
        Arrows v = slice(l, k, l.size());
        Term u1v = tr[i].rhs;
        u1v.path.arrows.insert(u1v.path.arrows.end(), v.begin(), v.end());
        emit_terms(std::move(u1v), Term{s1.tag, Path{s1.path.source, join({&s, &pr[j].rhs.arrows})}},
                   OverlapCase::kTermPathSuffix, r1, r2);
      }
    }
  }
  return out;
}

bool resolves(const CriticalPair& cp, const RewriteSystem& rules) {
  if (const auto* t = std::get_if<std::pair<Term, Term>>(&cp.sides)) {
    return reduce_term(t->first, rules) == reduce_term(t->second, rules);
  }
  const auto& p = std::get<std::pair<Path, Path>>(cp.sides);
  return reduce_path(p.first, rules.path_rules) == reduce_path(p.second, rules.path_rules);
}

bool check_confluence(const RewriteSystem& rules) {
  const auto pairs = find_critical_pairs(rules);
  return std::all_of(pairs.begin(), pairs.end(), [&](const CriticalPair& cp) { return resolves(cp, rules); });
}

namespace {

template <typename T>
const T& greater_of(const std::pair<T, T>& sides, const Ordering& order) {
  return order.compare(sides.first, sides.second) > 0 ? sides.first : sides.second;
}

// Path pairs before term pairs, each ascending by the greater side; ties keep
// generation order.
void sort_pairs(std::vector<CriticalPair>& pairs, const Ordering& order) {
  std::stable_sort(pairs.begin(), pairs.end(), [&](const CriticalPair& a, const CriticalPair& b) {
    if (a.is_term_pair() != b.is_term_pair()) return !a.is_term_pair();
    if (a.is_term_pair()) {
      return order.compare(greater_of(std::get<0>(a.sides), order), greater_of(std::get<0>(b.sides), order)) < 0;
    }
    return order.compare(greater_of(std::get<1>(a.sides), order), greater_of(std::get<1>(b.sides), order)) < 0;
  });
}

RewriteSystem oriented_copy(const RewriteSystem& in, const Ordering& order) {
  RewriteSystem out;
  for (const auto& r : in.path_rules) add_oriented(out, r.lhs, r.rhs, order);
  for (const auto& r : in.term_rules) add_oriented(out, r.lhs, r.rhs, order);
  return out;
}

}  // namespace

CompletionResult complete(RewriteSystem rules, const Ordering& order, const CompletionOptions& options) {
  CompletionResult result;
  result.rules = oriented_copy(rules, order);
  RewriteSystem& current = result.rules;
  while (true) {
    if (result.passes >= options.limits.max_passes) {
      result.status = CompletionStatus::kLimitExceeded;
      result.reason = "pass limit of " + std::to_string(options.limits.max_passes) + " reached";
      return result;
    }
    ++result.passes;
    auto pairs = find_critical_pairs(current);
    sort_pairs(pairs, order);
    std::size_t added = 0;
    for (const auto& cp : pairs) {
      const std::size_t before = current.size();
      if (const auto* t = std::get_if<std::pair<Term, Term>>(&cp.sides)) {
        add_oriented(current, reduce_term(t->first, current), reduce_term(t->second, current), order);
      } else {
        const auto& p = std::get<std::pair<Path, Path>>(cp.sides);
        add_oriented(current, reduce_path(p.first, current.path_rules), reduce_path(p.second, current.path_rules),
                     order);
      }
      if (current.size() == before) continue;
      ++added;
      ++result.rules_added;
      if (current.size() > options.limits.max_rules) {
        result.status = CompletionStatus::kLimitExceeded;
        result.reason = "rule limit of " + std::to_string(options.limits.max_rules) + " exceeded";
        return result;
      }
    }
    if (added == 0) break;
  }
  result.status = CompletionStatus::kComplete;
  if (options.interreduce) current = interreduce(std::move(current), order);
  return result;
}

RewriteSystem interreduce(RewriteSystem rules, const Ordering& order) {
  RewriteSystem current = oriented_copy(rules, order);
  while (true) {
    std::vector<bool> dead_path(current.path_rules.size(), false);
    std::vector<bool> dead_term(current.term_rules.size(), false);
    auto alive = [&](RuleKind kind, std::size_t i) {
      return kind == RuleKind::kPath ? !dead_path[i] : !dead_term[i];
    };
    bool removed = false;
    for (std::size_t i = 0; i < current.path_rules.size(); ++i) {
      dead_path[i] = true;
      if (path_reducible(current.path_rules[i].lhs.arrows, current.path_rules, alive)) {
        removed = true;
      } else {
        dead_path[i] = false;
      }
    }
    for (std::size_t i = 0; i < current.term_rules.size(); ++i) {
      dead_term[i] = true;
      if (term_reducible(current.term_rules[i].lhs, current, alive)) {
        removed = true;
      } else {
        dead_term[i] = false;
      }
    }
    if (!removed) break;

    RewriteSystem next;
    for (std::size_t i = 0; i < current.path_rules.size(); ++i) {
      if (!dead_path[i]) next.path_rules.push_back(current.path_rules[i]);
    }
    for (std::size_t i = 0; i < current.term_rules.size(); ++i) {
      if (!dead_term[i]) next.term_rules.push_back(current.term_rules[i]);
    }
    // Dropped rules come back in reduced form so the equivalence is unchanged.
    for (std::size_t i = 0; i < current.path_rules.size(); ++i) {
      if (!dead_path[i]) continue;
      const auto& r = current.path_rules[i];
      add_oriented(next, reduce_path(r.lhs, next.path_rules), reduce_path(r.rhs, next.path_rules), order);
    }
    for (std::size_t i = 0; i < current.term_rules.size(); ++i) {
      if (!dead_term[i]) continue;
      const auto& r = current.term_rules[i];
      add_oriented(next, reduce_term(r.lhs, next), reduce_term(r.rhs, next), order);
    }
    current = std::move(next);
  }
  for (auto& r : current.path_rules) r.rhs = reduce_path(r.rhs, current.path_rules);
  for (auto& r : current.term_rules) r.rhs = reduce_term(r.rhs, current);
  return current;
}

}  // namespace kanbex
