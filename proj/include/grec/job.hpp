#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "grec/catalogue.hpp"
#include "grec/error.hpp"

namespace grec {

inline constexpr const char* kToolName = "grec";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kJobSchema = "grec/job/v1";
inline constexpr const char* kReportSchema = "grec/report/v1";

using Json = nlohmann::json;

/// Process exit status for each failure class.
enum class ExitCode : int { ok = 0, parse = 2, validation = 3, size_limit = 4, property_failure = 5 };

ExitCode exit_code_for(ErrorKind kind) noexcept;

struct ActionSpec {
  bool left_regular = true;
  std::vector<std::vector<PointId>> table;
  bool operator==(const ActionSpec&) const = default;
};

/// A set argument: a label into JobConfig::sets or an inline element list.
using SetRef = std::variant<std::string, std::vector<std::uint32_t>>;

struct FamilySpec {
  enum class Kind { all_nonempty, min_size, explicit_list, positive_measure };
  Kind kind = Kind::all_nonempty;
  std::size_t k = 1;
  std::vector<SetRef> generators;
  bool upward = false;
  bool invariant = false;
  bool excludes_empty = true;
  std::vector<std::string> weights;  // rationals as written after normalization
  bool operator==(const FamilySpec&) const = default;
};

struct NamedSet {
  std::string label;
  std::vector<std::uint32_t> elements;  // sorted, unique
  bool operator==(const NamedSet&) const = default;
};

struct JobConfig {
  GroupSpec group;
  ActionSpec action;
  FamilySpec family;
  std::vector<NamedSet> sets;
  std::string command;
  Json params = Json::object();
  bool timing = false;
  bool operator==(const JobConfig&) const = default;
};

/// Parses and checks a job document. Malformed JSON, unknown or missing
/// fields, unknown commands and undefined labels raise ParseError naming
/// the field.
JobConfig parse_job(const std::string& text);
JobConfig parse_job(const Json& doc);

/// The normalized config document; parse_job(normalized_inputs(c)) == c.
Json normalized_inputs(const JobConfig& config);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& doc);

struct JobOutcome {
  Json report;
  ExitCode exit_code = ExitCode::ok;
};

/// Executes the command. Library errors propagate as exceptions; a failed
/// property check is reported with ExitCode::property_failure.
JobOutcome run_job(const JobConfig& config);

/// Edge list of the Cayley graph selected by params.a, one "u v" line per
/// edge with u < v, ascending.
std::string export_graph(const JobConfig& config);

/// Group description as used in job and catalogue documents, e.g.
/// {"kind":"cyclic","n":6} or {"kind":"product","factors":[...]}.
GroupSpec parse_group_spec(const Json& doc, const std::string& path);
Json group_spec_json(const GroupSpec& spec);

/// Command names accepted in JobConfig::command, sorted.
std::vector<std::string> job_commands();

}  // namespace grec
