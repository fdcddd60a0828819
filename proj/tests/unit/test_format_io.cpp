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

#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"

using namespace kanbex;
using kanbex::test::data_path;
using kanbex::test::load;

TEST_CASE("words print with powers and IdWord") {
  auto kan = load("s3_groupoid.json");
  CHECK(format_path(kan, path_from_labels(kan, {"a1", "a2", "a4"})) == "a1*a2*a4");
  CHECK(format_path(kan, Path{make_id<ObjectId>(2), {}}) == "IdWord");
  auto g = load("infinite_category.json");
  CHECK(format_path(g, path_from_labels(g, {"a", "b", "b", "b"})) == "a*b^3");
  CHECK(format_term(g, parse_term(g, "e1*a*b^2")) == "e1*a*b^2");
  CHECK(format_term(g, parse_term(g, "e2")) == "e2");
}

TEST_CASE("word parsing") {
  CHECK(parse_word("x1*b1*b2") == std::vector<std::string>{"x1", "b1", "b2"});
  CHECK(parse_word("H*a^3*c") == std::vector<std::string>{"H", "a", "a", "a", "c"});
  CHECK(parse_word("x1,b1") == std::vector<std::string>{"x1", "b1"});
  CHECK(parse_word("IdWord").empty());
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS((void)parse_word("a^"), ParseError);
  CHECK_THROWS_AS((void)parse_word("a**b"), ParseError);
}

TEST_CASE("identity paths need a source when parsed") {
  auto kan = load("s3_groupoid.json");
  CHECK_THROWS_AS((void)parse_path(kan, "IdWord"), ParseError);
  CHECK(parse_path(kan, "IdWord", make_id<ObjectId>(3)).source == make_id<ObjectId>(3));
  CHECK_THROWS_AS((void)parse_term(kan, "a1"), ParseError);
}

TEST_CASE("systems round-trip through text") {
  for (const char* name : {"two_object.json", "s3_groupoid.json", "coequaliser_presentation.json"}) {
    auto kan = load(name);
    auto r = kanbex::test::completed(kan);
    auto lines = format_system(kan, r.rules, OrderSpec::declaration(kan));
    auto back = parse_system(kan, lines);
    CHECK(format_system(kan, back, OrderSpec::declaration(kan)) == lines);
    CHECK(back.size() == r.rules.size());
  }
}

TEST_CASE("every presentation file round-trips through JSON") {
  for (const auto& entry : std::filesystem::directory_iterator(KANBEX_TEST_DATA)) {
    const auto doc = read_json_file(entry.path());
    if (!doc.contains("ObA")) continue;
    CAPTURE(entry.path().string());
    auto kan = presentation_from_json(doc);
    auto again = presentation_from_json(presentation_to_json(kan));
    CHECK(again == kan);
    CHECK(presentation_to_json(again) == presentation_to_json(kan));
  }
}

TEST_CASE("malformed presentations") {
  using nlohmann::json;
  auto doc = read_json_file(data_path("two_object.json"));
  SUBCASE("missing field") {
    doc.erase("RelB");
    CHECK_THROWS_AS((void)presentation_from_json(doc), ParseError);
  }
  SUBCASE("unknown arrow") {
    doc["FArrA"][0] = "b9";
    CHECK_THROWS_AS((void)presentation_from_json(doc), ParseError);
  }
  SUBCASE("unknown element") {
    doc["XArrA"][0][0] = "z";
    CHECK_THROWS_AS((void)presentation_from_json(doc), ParseError);
  }
  SUBCASE("bad arrow shape") {
    doc["ArrB"][0] = json::array({"b1", 1});
    CHECK_THROWS_AS((void)presentation_from_json(doc), ParseError);
  }
  SUBCASE("unknown object is left for the validator") {
    doc["ArrB"][0] = json::array({"b1", 1, 9});
    auto kan = presentation_from_json(doc);
    CHECK_FALSE(validate_presentation(kan).ok());
  }
  CHECK_THROWS_AS((void)read_json_file(data_path("no_such_file.json")), std::ios_base::failure);
}

TEST_CASE("identity relation sides") {
  auto doc = nlohmann::json::parse(R"({
    "ObA": [], "ArrA": [], "ObB": [1, 2], "ArrB": [["f", 1, 2], ["g", 2, 1]],
    "RelB": [["f*g", {"id": 1}], [[], "g*f"]], "FObA": [], "FArrA": [], "XObA": [], "XArrA": []})");
  auto kan = presentation_from_json(doc);
  REQUIRE(validate_presentation(kan).ok());
  CHECK(kan.rel_b[0].second == Path{make_id<ObjectId>(0), {}});
  CHECK(kan.rel_b[1].first == Path{make_id<ObjectId>(1), {}});
}
