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
#include "oracles.hpp"

using namespace kanbex;
using kanbex::test::load;
using kanbex::test::sorted;
using kanbex::test::sorted_lines;

namespace {

// One object, arrows a and b, two tags.
KanPresentation letters() {
  return presentation_from_json(nlohmann::json::parse(R"({
    "ObA": [1], "ArrA": [], "ObB": [1], "ArrB": [["a", 1, 1], ["b", 1, 1]], "RelB": [],
    "FObA": [1], "FArrA": [], "XObA": [["x", "y"]], "XArrA": []})"));
}

}  // namespace

TEST_CASE("initial rules of the two-object example") {
  auto kan = load("two_object.json");
  LengthLexOrdering order(OrderSpec::declaration(kan));
  auto rules = initial_rules(kan, order);
  CHECK(rules.term_rules.size() == 5);
  CHECK(rules.path_rules.size() == 1);
  CHECK(format_system(kan, rules, OrderSpec::declaration(kan)) ==
        std::vector<std::string>{"x1*b1 -> y1", "x2*b1 -> y2", "x3*b1 -> y1", "b1*b2*b3 -> b4",
                                 "y1*b2*b3 -> x1", "y2*b2*b3 -> x2"});
}

TEST_CASE("initial rules of an empty presentation are empty") {
  LengthLexOrdering order(OrderSpec{});
  CHECK(initial_rules(KanPresentation{}, order).empty());
}

TEST_CASE("initial rules reject an invalid presentation") {
  auto kan = load("two_object.json");
  kan.f_arr_a[1] = path_from_labels(kan, {"b2"});
  LengthLexOrdering order(OrderSpec::declaration(kan));
  CHECK_THROWS_AS((void)initial_rules(kan, order), KanError);
}

TEST_CASE("single steps apply the tag rule first, then the leftmost factor") {
  auto kan = load("two_object.json");
  LengthLexOrdering order(OrderSpec::declaration(kan));
  auto rules = initial_rules(kan, order);
  auto t = parse_term(kan, "x1*b1*b2*b3");
  auto step = rewrite_once(t, rules);
  REQUIRE(step.has_value());
  CHECK(format_term(kan, *step) == "y1*b2*b3");
  CHECK(format_term(kan, reduce_term(t, rules)) == "x1");
  auto p = path_from_labels(kan, {"b1", "b2", "b3", "b1", "b2", "b3"});
  auto once = rewrite_once(p, rules.path_rules);
  REQUIRE(once.has_value());
  CHECK(format_path(kan, *once) == "b4*b1*b2*b3");
  CHECK(format_path(kan, reduce_path(p, rules.path_rules)) == "b4^2");
  CHECK(is_irreducible(path_from_labels(kan, {"b4", "b5"}), rules.path_rules));
  CHECK_FALSE(is_irreducible(parse_term(kan, "x2*b1"), rules));
  CHECK_FALSE(rewrite_once(parse_term(kan, "x1*b4"), rules).has_value());
}

TEST_CASE("a term rule overlapping a path rule twice gives two pairs") {
  auto kan = letters();
  RewriteSystem rules;
  rules.term_rules.push_back(TermRule{parse_term(kan, "x*a^2*b*a"), parse_term(kan, "y*b*a")});
  rules.path_rules.push_back(PathRule{parse_path(kan, "a^2"), parse_path(kan, "b")});
  // a^2 -> b also overlaps itself; only the term pairs are of interest here.
  auto pairs = find_critical_pairs(rules);
  std::erase_if(pairs, [](const CriticalPair& cp) { return !cp.is_term_pair(); });
  REQUIRE(pairs.size() == 2);
  std::set<std::pair<OverlapCase, std::string>> seen;
  for (const auto& cp : pairs) {
    REQUIRE(cp.is_term_pair());
    const auto& [l, r] = std::get<0>(cp.sides);
    seen.emplace(cp.overlap, format_term(kan, l) + " | " + format_term(kan, r));
  }
  CHECK(seen.count({OverlapCase::kTermHasPath, "y*b*a | x*b^2*a"}) == 1);
  CHECK(seen.count({OverlapCase::kTermPathSuffix, "y*b*a^2 | x*a^2*b^2"}) == 1);
  CHECK(oracle::library_critical_pairs(rules) == oracle::critical_pairs_by_alignment(rules));
}

TEST_CASE("each overlap shape is found") {
  auto kan = letters();
  auto path = [&](const char* s) { return parse_path(kan, s); };
  auto t = [&](const char* s) { return parse_term(kan, s); };
  SUBCASE("term prefix") {
    RewriteSystem r;
    r.term_rules = {TermRule{t("x*a"), t("y")}, TermRule{t("x*a*b"), t("x")}};
    auto pairs = find_critical_pairs(r);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].overlap == OverlapCase::kTermPrefix);
    const auto& [l, rr] = std::get<0>(pairs[0].sides);
    CHECK(format_term(kan, l) == "y*b");
    CHECK(format_term(kan, rr) == "x");
  }
  SUBCASE("path inside path") {
    RewriteSystem r;
    r.path_rules = {PathRule{path("a*b*a"), path("b")}, PathRule{path("b"), path("a")}};
    auto pairs = find_critical_pairs(r);
    std::erase_if(pairs, [](const CriticalPair& cp) { return cp.overlap != OverlapCase::kPathInPath; });
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].overlap == OverlapCase::kPathInPath);
    const auto& [l, rr] = std::get<1>(pairs[0].sides);
    CHECK(format_path(kan, l) == "b");
    CHECK(format_path(kan, rr) == "a^3");
  }
  SUBCASE("path suffix, including a self overlap") {
    RewriteSystem r;
    r.path_rules = {PathRule{path("a*b*a"), path("b")}};
    auto pairs = find_critical_pairs(r);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].overlap == OverlapCase::kPathSuffix);
    const auto& [l, rr] = std::get<1>(pairs[0].sides);
    CHECK(format_path(kan, l) == "b^2*a");
    CHECK(format_path(kan, rr) == "a*b^2");
  }
  SUBCASE("disjoint rules have none") {
    RewriteSystem r;
    r.path_rules = {PathRule{path("a^2"), path("a")}};
    r.term_rules = {TermRule{t("x*b"), t("y")}};
    CHECK(find_critical_pairs(r).empty());
    CHECK(check_confluence(r));
  }
}

TEST_CASE("completion of the two-object example") {
  auto kan = load("two_object.json");
  auto result = kanbex::test::completed(kan);
  REQUIRE(result.complete());
  CHECK(result.rules_added == 3);
  CHECK(sorted_lines(kan, result.rules) ==
        sorted({"x1*b1 -> y1", "x1*b4 -> x1", "x2*b1 -> y2", "x2*b4 -> x2", "x3*b1 -> y1", "x3*b4 -> x1",
                "b1*b2*b3 -> b4", "y1*b2*b3 -> x1", "y2*b2*b3 -> x2"}));
  CHECK(check_confluence(result.rules));
}

TEST_CASE("completion limits are reported, not hidden") {
  auto kan = load("two_object.json");
  CompletionOptions tight;
  tight.limits.max_rules = 6;
  auto r = kanbex::test::completed(kan, tight);
  CHECK(r.status == CompletionStatus::kLimitExceeded);
  CHECK(r.reason.find("rule limit") != std::string::npos);
  tight.limits = {10000, 1};
  r = kanbex::test::completed(kan, tight);
  CHECK(r.status == CompletionStatus::kLimitExceeded);
  CHECK(r.reason.find("pass limit") != std::string::npos);
}

TEST_CASE("interreduction drops redundant rules and normalises right sides") {
  auto kan = letters();
  LengthLexOrdering order(OrderSpec::declaration(kan));
  RewriteSystem r;
  r.path_rules = {PathRule{parse_path(kan, "a^3"), parse_path(kan, "a*b")}, PathRule{parse_path(kan, "a*b"),
                                                                                        parse_path(kan, "b")},
                  PathRule{parse_path(kan, "a^2*b"), parse_path(kan, "b")}};
  auto out = interreduce(r, order);
  CHECK(sorted_lines(kan, out) == sorted({"a^3 -> b", "a*b -> b"}));
  CHECK(interreduce(out, order) == out);
}

TEST_CASE("an already complete category adds nothing") {
  auto kan = load("infinite_category.json");
  LengthLexOrdering order(OrderSpec::declaration(kan));
  auto init = initial_rules(kan, order);
  CHECK(check_confluence(init));
  auto r = complete(init, order);
  CHECK(r.complete());
  CHECK(r.rules_added == 0);
  CHECK(r.rules.size() == 2);
}
