#pragma once

// Reports printed by the command-line tool, in a line-oriented human form and
// a single JSON document for machines.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torslice/gauss.hpp"
#include "torslice/group.hpp"
#include "torslice/moves.hpp"
#include "torslice/oracle.hpp"
#include "torslice/selfcheck.hpp"

namespace torslice {

struct Report {
  std::string command;
  std::string input;
  std::optional<std::size_t> ref;
  FreeWord word;
  ModelElement normal_form;
  std::optional<InvariantValue> pair;  // absent for words with odd a-count
  std::optional<Z2Coords> z2;          // of the class of `word` itself
  bool trivial = true;
  Verdict verdict = Verdict::Inconclusive;
};

Report invariant_report(const GaussDiagram& d, std::string input, std::size_t ref = 1);
Report reduce_report(const FreeWord& w, std::string input);

nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const InvariantValue& v);
nlohmann::ordered_json fuzz_json(const std::vector<FuzzTrial>& trials, const FuzzOptions& options);
nlohmann::ordered_json selfcheck_json(const std::vector<CheckResult>& checks);

/// JSON document, two-space indented, newline terminated.
std::string render_machine(const nlohmann::ordered_json& doc);
std::string render_human(const Report& r);
std::string render_human(const InvariantValue& v);

}  // namespace torslice
