#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccplus/dsl/expand.hpp"
#include "ccplus/elim.hpp"
#include "ccplus/solver.hpp"
#include "json.hpp"

namespace ccplus::dsl {

enum class Command {
  kModels,
  kExplain,
  kCompletion,
  kDefiniteCheck,
  kStates,
  kTransitions,
  kDiagram,
  kTranslateCt,
  kAdl2Cplus,
  kEliminate,
  kPlan,
};

std::optional<Command> command_from_name(std::string_view name);
const char* command_name(Command c);
const std::vector<std::string>& command_names();

enum class Format { kText, kRecords, kDot };

struct QuerySpec {
  Command command = Command::kModels;
  std::optional<std::size_t> limit;
  std::optional<std::string> eliminate;         // constant to eliminate; all when absent
  std::optional<EliminationMethod> method;      // definite where it applies when absent
  std::size_t max_steps = 10;
};

struct Report {
  Command command = Command::kModels;
  std::string noun;  // what the summary counts: "models", "states", ...
  // One record per result item, and the matching human-readable lines.
  // Translations and eliminations produce source text that parses back.
  std::vector<nlohmann::json> records;
  std::vector<std::string> lines;
  std::size_t count = 0;
  // Diagram reports only.
  std::optional<TransitionDiagram> diagram;
  ActionSignature action_signature;
  SearchStats stats;
  double seconds = 0;
};

// Throws SemanticError when the command does not fit the unit (transitions of
// a causal theory, ...) and lets precondition failures from the modules
// through.
Report run(const Expanded& unit, const QuerySpec& query);

// text: lines followed by a "# <count> <noun>" summary. records: one JSON
// object per line with sorted keys, then {"#summary": {...}}. dot: diagram
// reports only. `with_stats` adds search counters and wall time.
void emit(const Report& report, Format format, std::ostream& out, bool with_stats = false);

// Interpretation as a flat record: {"c": "1", "p": "tt"}.
nlohmann::json to_record(const Signature& sig, const Interpretation& interp);

}  // namespace ccplus::dsl
