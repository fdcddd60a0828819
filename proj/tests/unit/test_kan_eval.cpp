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

#include "doctest.h"
#include "fixtures.hpp"
#include "kanbex/kan_eval.hpp"

using namespace kanbex;
using kanbex::test::load;

TEST_CASE("the two-object example exceeds the enumeration limit") {
  auto kan = load("two_object.json");
  auto r = kanbex::test::completed(kan);
  auto tables = enumerate(kan, r.rules, OrderSpec::declaration(kan));
  CHECK(tables.status == EnumerationStatus::kLimitExceeded);
  CHECK(tables.total == kDefaultEnumerationLimit);
  auto small = enumerate(kan, r.rules, OrderSpec::declaration(kan), 10);
  CHECK_FALSE(small.finite());
  CHECK(small.total == 10);
}

TEST_CASE("the covering groupoid has six arrows into each object") {
  auto kan = load("s3_groupoid.json");
  auto r = kanbex::test::completed(kan);
  REQUIRE(r.complete());
  auto tables = enumerate(kan, r.rules, OrderSpec::declaration(kan));
  REQUIRE(tables.finite());
  CHECK(tables.total == 36);
  for (const auto& per_object : tables.elements) CHECK(per_object.size() == 6);
  CHECK(tables.stages == 3);
}

TEST_CASE("enumeration refuses a non-confluent system") {
  auto kan = load("two_object.json");
  LengthLexOrdering order(OrderSpec::declaration(kan));
  auto init = initial_rules(kan, order);
  CHECK_THROWS_AS((void)enumerate(kan, init, OrderSpec::declaration(kan)), KanError);
  CHECK_THROWS_AS((void)enumerate(kan, kanbex::test::completed(kan).rules, OrderSpec::declaration(kan), 0),
                  KanError);
}

TEST_CASE("action, epsilon and naturality") {
  auto kan = load("coequaliser_presentation.json");
  auto r = kanbex::test::completed(kan);
  REQUIRE(r.complete());
  for (std::size_t i = 0; i < kan.elements.size(); ++i) {
    Term e = epsilon(kan, make_id<ElementId>(i), r.rules);
    CHECK(is_irreducible(e, r.rules));
    CHECK(tau_bar(kan, e) == make_id<ObjectId>(0));
  }
  CHECK(format_term(kan, epsilon(kan, *kan.find_element("y2"), r.rules)) == "x1");
  CHECK(naturality_check(kan, r.rules));
  CHECK_THROWS_AS((void)epsilon(kan, make_id<ElementId>(99), r.rules), KanError);

  auto two = load("two_object.json");
  auto rr = kanbex::test::completed(two);
  Term x1 = epsilon(two, *two.find_element("x1"), rr.rules);
  CHECK(format_term(two, act(two, x1, path_from_labels(two, {"b1", "b2", "b3"}), rr.rules)) == "x1");
  CHECK_THROWS_AS((void)act(two, x1, path_from_labels(two, {"b2"}), rr.rules), ActionError);
  CHECK(naturality_check(two, rr.rules));
}
