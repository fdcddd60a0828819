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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kanbex/cli.hpp"

namespace {

// "a,b,c" and repeated flags both end up as one flat label list.
std::vector<std::string> flatten(const std::vector<std::string>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts) {
    std::size_t start = 0;
    while (start <= p.size()) {
      std::size_t end = p.find(',', start);
      if (end == std::string::npos) end = p.size();
      if (end > start) out.push_back(p.substr(start, end - start));
      start = end + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using kanbex::cli::Command;
  kanbex::cli::RunConfig cfg;
  try {
    if (auto env = kanbex::cli::limit_from_env()) cfg.enumeration_limit = *env;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kanbex::cli::kExitInvalid;
  }

  CLI::App app{"Rewriting for Kan extension presentations"};
  app.require_subcommand(1);

  std::vector<std::string> xorder;
  std::vector<std::string> deltaorder;
  std::string format = "text";
  bool no_interreduce = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input_path, "presentation JSON file")->required();
    sub->add_option("--limit", cfg.enumeration_limit, "enumeration limit")->check(CLI::PositiveNumber);
    sub->add_option("--max-rules", cfg.limits.max_rules, "completion rule cap")->check(CLI::PositiveNumber);
    sub->add_option("--max-passes", cfg.limits.max_passes, "completion pass cap")->check(CLI::PositiveNumber);
    sub->add_flag("--no-interreduce", no_interreduce, "keep the raw completed system");
    sub->add_option("--order", cfg.order, "term ordering")->check(CLI::IsMember({"lenlex"}));
    sub->add_option("--xorder", xorder, "X-element order, comma separated");
    sub->add_option("--deltaorder", deltaorder, "Δ-arrow order, comma separated");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  const std::map<std::string, std::pair<Command, std::string>> commands{
      {"rules", {Command::kRules, "print the initial rewrite system"}},
      {"complete", {Command::kComplete, "complete the rewrite system"}},
      {"enumerate", {Command::kEnumerate, "enumerate normal forms"}},
      {"reduce", {Command::kReduce, "normal form of one term"}},
      {"confluent", {Command::kConfluent, "test the initial rules for confluence"}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    common(sub);
    subs[name] = sub;
  }
  subs["reduce"]->add_option("--term", cfg.term, "term as x1*b1*b2 or x1,b1,b2")->required();

  CLI::App* encode = app.add_subcommand("encode", "build a presentation from a problem descriptor");
  encode->add_option("kind", cfg.encode_kind, "encoding kind")
      ->required()
      ->check(CLI::IsMember({"monoid", "category", "cosets", "congruence", "quotient", "orbits", "colimit",
                             "induced"}));
  encode->add_option("file", cfg.input_path, "descriptor JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kanbex::cli::kExitInvalid;
  }

  for (const auto& [name, entry] : commands) {
    if (subs[name]->parsed()) cfg.command = entry.first;
  }
  if (encode->parsed()) cfg.command = Command::kEncode;
  cfg.x_order = flatten(xorder);
  cfg.delta_order = flatten(deltaorder);
  cfg.interreduce = !no_interreduce;
  cfg.format = format == "json" ? kanbex::cli::OutputFormat::kJson : kanbex::cli::OutputFormat::kText;
  return kanbex::cli::run(cfg, std::cout, std::cerr);
}
