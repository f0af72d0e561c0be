#pragma once
// JSON logic-spec ingestion, report emission, and the input digest.
//
// Logic-spec documents carry kind "matrix", "finite", or "builtin"
// (docs/schema/logic_spec.schema.json). Reports embed their inputs so any
// run can be reproduced from the report alone; keys are emitted in a fixed
// order and input_digest is FNV-1a-64 over the canonical input rendering
// (docs/schema/report.schema.json).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conseq/gallery.hpp"
#include "conseq/miner.hpp"
#include "conseq/principles.hpp"

namespace conseq {

struct LoadedLogic {
  std::string label;  // builtin id or file path, used in report headers
  Logic logic;
};

// Parses a logic-spec JSON document. Malformed documents throw
// std::invalid_argument with a diagnostic naming the offending part.
LoadedLogic logic_from_json(const std::string& text, const std::string& label = "spec");

// Resolves "builtin:NAME[:param]" through the gallery and treats any other
// argument as a spec file path (std::runtime_error when unreadable).
LoadedLogic resolve_logic_argument(const std::string& arg);

// Emission. Finite structures and matrices round-trip bit-exactly through
// logic_from_json; rule structures are emitted as builtin references.
std::string logic_to_json(const Logic& logic);

// {"require": [{"principle": ID, "status": "proven"|"refuted"}, ...],
//  "structural_filters": {"reflexive": bool, ...},   (optional)
//  "max_carrier": int}                               (optional, default 4)
SeparationQuery separation_query_from_json(const std::string& text);

struct CheckRecord {
  std::string principle;
  Verdict verdict;
  double milliseconds = 0.0;
};

struct ReportInputs {
  std::string command;                        // "check", "qn", "mine", ...
  std::string logic_argument;                 // as given on the command line
  std::optional<std::string> logic_document;  // embedded spec file content
  std::vector<std::string> principles;
  // Command-specific arguments (mode, premises, formula, query, ...) in the
  // order they should be replayed.
  std::vector<std::pair<std::string, std::string>> extra;
  Budget budget;
};

struct Report {
  std::string version;
  std::string input_digest;  // 16 hex digits; filled by seal_report
  ReportInputs inputs;
  std::vector<CheckRecord> checks;
  // Non-check payloads: named scalar results (e.g. "entails": "false") and
  // listed lines (quasi-negation pools, builtin inventories).
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> listing;
  std::optional<std::string> structure_json;  // mined structure, as logic_to_json
};

std::uint64_t fnv1a64(std::string_view bytes);

// Computes input_digest from the canonical rendering of r.inputs.
void seal_report(Report& r);

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
// Same data as the JSON rendering, formatted for terminals.
std::string report_to_text(const Report& r);

}  // namespace conseq
