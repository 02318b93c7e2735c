#pragma once

// Verification reports and table renderings. Rationals are always emitted as
// "p/q" strings, never floats.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hnid/runner.hpp"

namespace hnid {

struct ReportSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;
};

struct VerificationReport {
  std::string suite;
  std::string generated_at;  // ISO-8601 UTC; the only nondeterministic field
  std::vector<CellResult> cells;
  ReportSummary summary;
};

// Current time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

// Sorts `cells` and tallies the summary.
VerificationReport make_report(std::string suite, std::vector<CellResult> cells,
                               std::string generated_at = utc_timestamp());

nlohmann::ordered_json to_json(const CellResult& cell);
nlohmann::ordered_json to_json(const VerificationReport& report);

// Pretty-printed JSON document with a trailing newline.
std::string render_json(const VerificationReport& report);

struct TableRow {
  std::string id;
  std::string location;
  std::string source;
  std::vector<std::int64_t> ns;      // sample indices 1..n_max
  std::vector<std::string> values;   // LHS at each sample n, or "skip"
  bool pass = true;                  // every in-domain n in 0..n_max
  std::optional<std::string> disputed;
};

// Rows for Table I (which = 1) or Table II (which = 2). Throws DomainError
// for any other table number.
std::vector<TableRow> build_table(int which, std::int64_t n_max);

std::string render_table_markdown(int which, const std::vector<TableRow>& rows);
nlohmann::ordered_json table_to_json(int which, const std::vector<TableRow>& rows);

}  // namespace hnid
