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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace kanbex;

TEST_CASE("random presentations: reduction terminates in irreducibles and keeps the target") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto kan = oracle::random_presentation(rng);
    LengthLexOrdering order(OrderSpec::declaration(kan));
    auto rules = initial_rules(kan, order);
    const bool confluent = check_confluence(rules);
    for (const Term& t : oracle::all_terms(kan, 4)) {
      Term cur = t;
      std::size_t steps = 0;
      while (auto next = rewrite_once(cur, rules)) {
        REQUIRE(kan.tau(*next) == kan.tau(cur));
        REQUIRE(order.compare(*next, cur) < 0);
        cur = std::move(*next);
        REQUIRE(++steps < 10000);
      }
      CHECK(is_irreducible(cur, rules));
      const Term nf = reduce_term(t, rules);
      CHECK(is_irreducible(nf, rules));
      CHECK(kan.tau(nf) == kan.tau(t));
      // Without confluence the two strategies may stop at different irreducibles.
      if (confluent) CHECK(nf == cur);
    }
  }
}

TEST_CASE("critical pairs agree with the alignment oracle on random rules") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto kan = oracle::random_presentation(rng);
    auto rules = oracle::random_rule_pair(rng, kan, 3);
    CHECK(oracle::library_critical_pairs(rules) == oracle::critical_pairs_by_alignment(rules));
  }
}

TEST_CASE("completion preserves the equivalence on small terms") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto kan = oracle::random_presentation(rng);
    LengthLexOrdering order(OrderSpec::declaration(kan));
    auto init = initial_rules(kan, order);
    CompletionOptions options;
    options.limits.max_rules = 200;
    auto r = complete(init, order, options);
    if (!r.complete()) continue;
    ++checked;
    CHECK(check_confluence(r.rules));
    oracle::BoundedClosure closure(kan, init, 6);
    // Every completed rule is a consequence of the initial ones.
    for (const auto& rule : r.rules.term_rules) {
      if (rule.lhs.length() <= 6 && rule.rhs.length() <= 6) CHECK(closure.equivalent(rule.lhs, rule.rhs));
    }
  }
  CHECK(checked > 30);
}
