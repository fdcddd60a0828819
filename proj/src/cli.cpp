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

#include "kanbex/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ios>
#include <memory>
#include <string_view>

#include "json.hpp"
#include "kanbex/encodings.hpp"
#include "kanbex/format.hpp"
#include "kanbex/presentation_io.hpp"

namespace kanbex::cli {

using nlohmann::json;

namespace {

struct LimitHit {
  std::string reason;
};

void check_config(const RunConfig& cfg) {
  if (cfg.enumeration_limit == 0) throw KanError("--limit must be positive");
  if (cfg.limits.max_rules == 0) throw KanError("--max-rules must be positive");
  if (cfg.limits.max_passes == 0) throw KanError("--max-passes must be positive");
  if (cfg.input_path.empty()) throw KanError("an input file is required");
  if (cfg.command == Command::kReduce && cfg.term.empty()) throw KanError("reduce needs --term");
  if (cfg.command == Command::kEncode && cfg.encode_kind.empty()) throw KanError("encode needs a kind");
}

void print_rules(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out << l << '\n';
}

json rules_json(const std::vector<std::string>& lines) { return json(lines); }

class Session {
 public:
  Session(const RunConfig& cfg, KanPresentation kan)
      : cfg_(cfg),
        kan_(std::move(kan)),
        spec_(OrderSpec::from_labels(kan_, cfg.x_order, cfg.delta_order)),
        order_(make_ordering(cfg.order, spec_)) {}

  RewriteSystem initial() const { return initial_rules(kan_, *order_); }

  CompletionResult completed() const {
    CompletionOptions options;
    options.limits = cfg_.limits;
    options.interreduce = cfg_.interreduce;
    return complete(initial(), *order_, options);
  }

  std::vector<std::string> lines(const RewriteSystem& rules) const { return format_system(kan_, rules, spec_); }

  const KanPresentation& kan() const { return kan_; }
  const OrderSpec& spec() const { return spec_; }

 private:
  const RunConfig& cfg_;
  KanPresentation kan_;
  OrderSpec spec_;
  std::unique_ptr<Ordering> order_;
};

int report_completion_limit(const Session& s, const CompletionResult& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"status", "LimitExceeded"}, {"reason", r.reason}, {"rules", rules_json(s.lines(r.rules))}}.dump(2)
        << '\n';
  } else {
    out << "completion limit exceeded: " << r.reason << "\npartial rewrite system is:\n";
    print_rules(out, s.lines(r.rules));
  }
  return kExitLimit;
}

int cmd_rules(const Session& s, const RunConfig& cfg, std::ostream& out) {
  auto lines = s.lines(s.initial());
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"rules", rules_json(lines)}}.dump(2) << '\n';
  } else {
    print_rules(out, lines);
  }
  return kExitOk;
}

int cmd_complete(const Session& s, const RunConfig& cfg, std::ostream& out) {
  CompletionResult r = s.completed();
  if (!r.complete()) return report_completion_limit(s, r, cfg, out);
  auto lines = s.lines(r.rules);
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"status", "Complete"},
                {"passes", r.passes},
                {"rules_added", r.rules_added},
                {"rules", rules_json(lines)}}
               .dump(2)
        << '\n';
  } else {
    print_rules(out, lines);
  }
  return kExitOk;
}

std::string object_name(const KanPresentation& kan, std::size_t b) { return std::to_string(kan.ob_b[b]); }

int cmd_enumerate(const Session& s, const RunConfig& cfg, std::ostream& out) {
  CompletionResult r = s.completed();
  if (!r.complete()) return report_completion_limit(s, r, cfg, out);
  KanTables tables = enumerate(s.kan(), r.rules, s.spec(), cfg.enumeration_limit);
  const auto lines = s.lines(r.rules);
  if (cfg.format == OutputFormat::kJson) {
    json doc{{"status", tables.finite() ? "Finite" : "LimitExceeded"}, {"limit", cfg.enumeration_limit}};
    if (tables.finite()) {
      json sets = json::object();
      for (std::size_t b = 0; b < tables.elements.size(); ++b) {
        json elems = json::array();
        for (const Term& t : tables.elements[b]) elems.push_back(format_term(s.kan(), t));
        sets[object_name(s.kan(), b)] = std::move(elems);
      }
      doc["total"] = tables.total;
      doc["elements"] = std::move(sets);
    } else {
      doc["rules"] = rules_json(lines);
    }
    out << doc.dump(2) << '\n';
    return tables.finite() ? kExitOk : kExitLimit;
  }
  if (!tables.finite()) {
    out << "enumeration limit exceeded: complete rewrite system is:\n";
    print_rules(out, lines);
    return kExitLimit;
  }
  for (std::size_t b = 0; b < tables.elements.size(); ++b) {
    out << "KB" << object_name(s.kan(), b) << ": [";
    for (std::size_t i = 0; i < tables.elements[b].size(); ++i) {
      out << (i ? ", " : " ") << format_term(s.kan(), tables.elements[b][i]);
    }
    out << (tables.elements[b].empty() ? "]" : " ]") << '\n';
  }
  out << "total=" << tables.total << " status=Finite\n";
  return kExitOk;
}

int cmd_reduce(const Session& s, const RunConfig& cfg, std::ostream& out) {
  Term t = parse_term(s.kan(), cfg.term);
  CompletionResult r = s.completed();
  if (!r.complete()) return report_completion_limit(s, r, cfg, out);
  Term nf = reduce_term(std::move(t), r.rules);
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"term", cfg.term}, {"normal_form", format_term(s.kan(), nf)}}.dump(2) << '\n';
  } else {
    out << format_term(s.kan(), nf) << '\n';
  }
  return kExitOk;
}

int cmd_confluent(const Session& s, const RunConfig& cfg, std::ostream& out) {
  RewriteSystem rules = s.initial();
  const bool ok = check_confluence(rules);
  if (cfg.format == OutputFormat::kJson) {
    out << json{{"confluent", ok}, {"rules", rules_json(s.lines(rules))}}.dump(2) << '\n';
  } else {
    out << (ok ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_config(cfg);
  json doc = read_json_file(cfg.input_path);
  if (cfg.command == Command::kEncode) {
    out << presentation_to_json(encode_from_json(cfg.encode_kind, doc)).dump(2) << '\n';
    return kExitOk;
  }
  KanPresentation kan = presentation_from_json(doc);
  if (auto report = validate_presentation(kan); !report.ok()) {
    err << "invalid presentation:\n" << report.to_string();
    return kExitInvalid;
  }
  Session s(cfg, std::move(kan));
  switch (cfg.command) {
    case Command::kRules:
      return cmd_rules(s, cfg, out);
    case Command::kComplete:
      return cmd_complete(s, cfg, out);
    case Command::kEnumerate:
      return cmd_enumerate(s, cfg, out);
    case Command::kReduce:
      return cmd_reduce(s, cfg, out);
    case Command::kConfluent:
      return cmd_confluent(s, cfg, out);
    case Command::kEncode:
      break;
  }
  return kExitOk;
}

}  // namespace

std::optional<std::size_t> limit_from_env() {
  const char* raw = std::getenv("KANBEX_LIMIT");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw KanError("KANBEX_LIMIT must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(cfg, out, err);
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const KanError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace kanbex::cli
