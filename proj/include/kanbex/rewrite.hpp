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

#ifndef KANBEX_REWRITE_HPP_
#define KANBEX_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kanbex/ordering.hpp"
#include "kanbex/presentation.hpp"
#include "kanbex/types.hpp"

namespace kanbex {

/// One-sided rule x|p -> y|q, applied at the tag: s·v -> u·v.
struct TermRule {
  Term lhs;
  Term rhs;

  friend bool operator==(const TermRule&, const TermRule&) = default;
};

/// Two-sided rule on paths, applied to any factor right of the separator.
struct PathRule {
  Path lhs;
  Path rhs;

  friend bool operator==(const PathRule&, const PathRule&) = default;
};

/// The pair (R_T, R_P).
struct RewriteSystem {
  std::vector<TermRule> term_rules;
  std::vector<PathRule> path_rules;

  [[nodiscard]] std::size_t size() const noexcept { return term_rules.size() + path_rules.size(); }
  [[nodiscard]] bool empty() const noexcept { return size() == 0; }

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;
};

/// R_ε = {(x|Fa, x·a|id)} together with R_K = RelB, each pair oriented by
/// `order`. Pairs with equal sides and repeated rules are dropped.
/// Throws KanError if the presentation does not validate.
[[nodiscard]] RewriteSystem initial_rules(const KanPresentation& kan, const Ordering& order);

// ---------------------------------------------------------------------------
// Reduction

/// Leftmost single rewrite step on a path, or nullopt when irreducible.
[[nodiscard]] std::optional<Path> rewrite_once(const Path& p, std::span<const PathRule> rules);
/// Single rewrite step on a term: a term rule at the tag first, then the
/// leftmost path-rule factor.
[[nodiscard]] std::optional<Term> rewrite_once(const Term& t, const RewriteSystem& rules);

/// Full reduction. Without confluence the irreducible reached may differ from
/// iterating rewrite_once.
[[nodiscard]] Path reduce_path(Path p, std::span<const PathRule> rules);
[[nodiscard]] Term reduce_term(Term t, const RewriteSystem& rules);

[[nodiscard]] bool is_irreducible(const Path& p, std::span<const PathRule> rules);
[[nodiscard]] bool is_irreducible(const Term& t, const RewriteSystem& rules);

// ---------------------------------------------------------------------------
// Overlaps

/// The five overlap shapes between left hand sides.
enum class OverlapCase : std::uint8_t {
  kTermPrefix = 1,     // (i)   s2 = s1·q
  kPathInPath = 2,     // (ii)  l1 = p l2 q
  kPathSuffix = 3,     // (iii) l1 q = p l2
  kTermPathSuffix = 4, // (iv)  s1·q = s·l1
  kTermHasPath = 5,    // (v)   s1 = s·(l1 q)
};

[[nodiscard]] const char* overlap_name(OverlapCase c) noexcept;

enum class RuleKind : std::uint8_t { kTerm, kPath };

struct RuleRef {
  RuleKind kind = RuleKind::kTerm;
  std::size_t index = 0;

  friend auto operator<=>(const RuleRef&, const RuleRef&) = default;
};

struct CriticalPair {
  std::variant<std::pair<Term, Term>, std::pair<Path, Path>> sides;
  OverlapCase overlap = OverlapCase::kTermPrefix;
  RuleRef first;
  RuleRef second;

  [[nodiscard]] bool is_term_pair() const noexcept { return sides.index() == 0; }
};

/// All critical pairs from overlaps of ordered rule pairs, including self
/// overlaps; pairs whose two sides coincide are omitted.
[[nodiscard]] std::vector<CriticalPair> find_critical_pairs(const RewriteSystem& rules);

/// Whether both sides reduce to the same normal form.
[[nodiscard]] bool resolves(const CriticalPair& cp, const RewriteSystem& rules);

/// Local confluence: every critical pair resolves.
[[nodiscard]] bool check_confluence(const RewriteSystem& rules);

// ---------------------------------------------------------------------------
// Completion

struct CompletionLimits {
  std::size_t max_rules = 10000;
  std::size_t max_passes = 100;
};

enum class CompletionStatus : std::uint8_t { kComplete, kLimitExceeded };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::kComplete;
  std::string reason;
  RewriteSystem rules;
  std::size_t passes = 0;
  std::size_t rules_added = 0;

  [[nodiscard]] bool complete() const noexcept { return status == CompletionStatus::kComplete; }
};

struct CompletionOptions {
  CompletionLimits limits;
  /// Interreduce the system once the pass loop reaches a fixed point.
  bool interreduce = true;
};

/// Knuth-Bendix style completion over terms and paths. Each pass computes the
/// critical pairs of the current system, reduces both sides against the
/// growing system and appends the oriented pair when it does not resolve.
/// Stops when a pass adds nothing or a limit is hit.
[[nodiscard]] CompletionResult complete(RewriteSystem rules, const Ordering& order,
                                        const CompletionOptions& options = {});

/// Removes rules whose lhs is reducible by the others (re-adding their
/// reduced, re-oriented pair when it is non-trivial) and normalises every
/// rhs. Preserves the equivalence relation.
[[nodiscard]] RewriteSystem interreduce(RewriteSystem rules, const Ordering& order);

}  // namespace kanbex

#endif  // KANBEX_REWRITE_HPP_
