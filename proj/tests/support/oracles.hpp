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

#ifndef KANBEX_TESTS_ORACLES_HPP_
#define KANBEX_TESTS_ORACLES_HPP_

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the plain data types.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kanbex/presentation.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex::oracle {

/// Canonical string for a term or path, used to compare pair sets.
std::string key(const Term& t);
std::string key(const Path& p);

/// Unordered pair of side keys.
using PairKey = std::pair<std::string, std::string>;
PairKey unordered(std::string a, std::string b);

/// Every way the left hand sides of two rules can be laid over a common word
/// so that they share at least one position, each rewritten independently.
/// Identical rule at identical position and equal outcomes are skipped.
std::set<PairKey> critical_pairs_by_alignment(const RewriteSystem& two_rules);

/// The same pairs as reported by the library, keyed identically.
std::set<PairKey> library_critical_pairs(const RewriteSystem& rules);

/// Union-find over every term of length <= bound, joined by single rule
/// applications in either direction.
class BoundedClosure {
 public:
  BoundedClosure(const KanPresentation& kan, const RewriteSystem& rules, std::size_t bound);

  [[nodiscard]] bool equivalent(const Term& a, const Term& b);
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

 private:
  std::size_t index(const Term& t) const;
  std::size_t find(std::size_t i);
  void join(std::size_t a, std::size_t b);

  std::vector<Term> terms_;
  std::unordered_map<std::string, std::size_t> where_;
  std::vector<std::size_t> parent_;
};

/// Moves candidate rules into `accepted` once their sides are joined in the
/// bounded closure of the rules accepted so far, until nothing changes.
/// Returns how many candidates were never joined.
std::size_t prove_consequences(const KanPresentation& kan, RewriteSystem& accepted, const RewriteSystem& candidates,
                               std::size_t bound);

/// All terms x|p with 1 + |p| <= max_length, shortest first.
std::vector<Term> all_terms(const KanPresentation& kan, std::size_t max_length);

/// All paths from `source` with at most max_length arrows.
std::vector<Path> all_paths_from(const KanPresentation& kan, ObjectId source, std::size_t max_length);

/// Small union-find on integers.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t i);
  void join(std::size_t a, std::size_t b);
  [[nodiscard]] std::size_t classes();

 private:
  std::vector<std::size_t> parent_;
};

struct RandomShape {
  std::size_t max_delta_objects = 3;
  std::size_t max_delta_arrows = 4;
  std::size_t max_elements = 4;
  std::size_t max_word = 3;
};

/// A random presentation that passes validate_presentation.
KanPresentation random_presentation(std::mt19937& rng, const RandomShape& shape = {});

/// A random well-typed rule system of exactly two rules over `kan`.
RewriteSystem random_rule_pair(std::mt19937& rng, const KanPresentation& kan, std::size_t max_word);

/// A random composable path from `source`, length in [min_len, max_len].
Path random_path(std::mt19937& rng, const KanPresentation& kan, ObjectId source, std::size_t min_len,
                 std::size_t max_len);

}  // namespace kanbex::oracle

#endif  // KANBEX_TESTS_ORACLES_HPP_
