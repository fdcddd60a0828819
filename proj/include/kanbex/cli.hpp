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

#ifndef KANBEX_CLI_HPP_
#define KANBEX_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kanbex/kan_eval.hpp"
#include "kanbex/rewrite.hpp"

namespace kanbex::cli {

enum class Command { kRules, kComplete, kEnumerate, kReduce, kConfluent, kEncode };
enum class OutputFormat { kText, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  Command command = Command::kRules;
  std::string input_path;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  CompletionLimits limits;
  bool interreduce = true;
  std::string order = "lenlex";
  std::vector<std::string> x_order;
  std::vector<std::string> delta_order;
  OutputFormat format = OutputFormat::kText;
  /// `reduce` only.
  std::string term;
  /// `encode` only.
  std::string encode_kind;
};

/// Positive value of KANBEX_LIMIT, if set. Throws KanError on garbage.
[[nodiscard]] std::optional<std::size_t> limit_from_env();

/// Runs one command and returns its exit status. Normal output goes to `out`,
/// diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace kanbex::cli

#endif  // KANBEX_CLI_HPP_
