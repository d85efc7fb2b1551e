#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grec/catalogue.hpp"
#include "grec/job.hpp"

namespace grec {

inline constexpr const char* kCatalogueSchema = "grec/catalogue/v1";

struct SuiteOptions {
  std::optional<std::size_t> max_order;  // skip larger groups
  std::size_t threads = 1;
  std::vector<std::string> checks;  // subset of suite_checks(); empty runs all

  std::size_t return_set_max_order = 72;
  std::size_t filter_max_order = 24;
  std::size_t cover_max_order = 16;
  std::size_t cover_exhaustive_order = 10;
  std::size_t connection_samples = 1000;  // per group above the exhaustive order
  std::size_t ramsey_min_order = 6;
  std::size_t ramsey_max_order = 13;
  std::size_t ramsey_exhaustive_order = 11;
  std::size_t ramsey_samples = 128;  // 6-subsets per connection set above the exhaustive order
  std::size_t oracle_max_order = 16;
  std::size_t induced_samples = 4;  // induced subgraphs per connection set
  std::size_t asymmetric_cover_max_order = 8;
  std::size_t delta_system_max_order = 12;
  std::size_t delta_system_samples = 200;

  bool timing = false;
};

/// Outcome of one check on one group, optionally restricted to one family.
struct SuiteCell {
  std::string check;
  std::string family;  // empty for checks that do not take a family
  bool passed = true;
  std::uint64_t instances = 0;
  std::optional<std::string> counterexample;  // first failure only
};

struct SuiteEntry {
  std::string name;
  GroupSpec spec;
  std::size_t order = 0;
  bool valid = true;
  std::string error;  // construction failure when !valid
  std::vector<SuiteCell> cells;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  /// Summed task time per check; not part of the canonical output unless requested.
  std::map<std::string, double> seconds;

  bool all_passed() const;
  bool any_invalid() const;
  std::uint64_t instances(const std::string& check) const;
  ExitCode exit_code() const;
};

/// Check names in report order.
const std::vector<std::string>& suite_checks();

/// Runs every check on every entry. Entries that fail to build are reported
/// invalid and skipped; the rest of the batch still runs. Cells execute on
/// `threads` workers and are merged in catalogue order.
SuiteReport run_suite(const std::vector<CatalogueEntry>& catalogue, const SuiteOptions& options = {});

Json suite_report_json(const SuiteReport& report, const std::vector<CatalogueEntry>& catalogue,
                       const SuiteOptions& options);

/// {"schema": "grec/catalogue/v1", "groups": [{"name": ..., "group": {...}}]}
std::vector<CatalogueEntry> parse_catalogue(const std::string& text);
Json catalogue_json(const std::vector<CatalogueEntry>& catalogue);

}  // namespace grec
