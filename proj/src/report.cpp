#include "hnid/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "hnid/errors.hpp"

namespace hnid {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

VerificationReport make_report(std::string suite, std::vector<CellResult> cells,
                               std::string generated_at) {
  sort_results(cells);
  VerificationReport r{std::move(suite), std::move(generated_at), std::move(cells), {}};
  for (const auto& c : r.cells) {
    ++r.summary.total;
    switch (c.status) {
      case CellStatus::kPass: ++r.summary.passed; break;
      case CellStatus::kFail: ++r.summary.failed; break;
      case CellStatus::kSkipped: ++r.summary.skipped; break;
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const CellResult& c) {
  nlohmann::ordered_json j;
  j["record_id"] = c.cell.record_id;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : c.cell.params) j["params"][name] = value;
  j["n"] = c.cell.n;
  j["status"] = std::string(to_string(c.status));
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  if (c.lhs_deriv) j["lhs_deriv"] = *c.lhs_deriv;
  if (c.rhs_deriv) j["rhs_deriv"] = *c.rhs_deriv;
  if (c.disputed) j["disputed"] = *c.disputed;
  if (c.amended_pass) j["amended_pass"] = *c.amended_pass;
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["generated_at"] = r.generated_at;
  j["summary"] = {{"total", r.summary.total},
                  {"passed", r.summary.passed},
                  {"failed", r.summary.failed},
                  {"skipped", r.summary.skipped}};
  auto& cells = j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  return j;
}

std::string render_json(const VerificationReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::vector<TableRow> build_table(int which, std::int64_t n_max) {
  if (which != 1 && which != 2) {
    throw DomainError("table must be 1 or 2, got " + std::to_string(which));
  }
  const RecordKind kind = which == 1 ? RecordKind::kTableI : RecordKind::kTableII;
  std::vector<TableRow> rows;
  for (const auto& rec : registry()) {
    if (rec.kind != kind) continue;
    TableRow row{rec.id, rec.citation.location, rec.citation.source, {}, {}, true, rec.disputed};
    for (std::int64_t n = 0; n <= n_max; ++n) {
      const CellResult c = evaluate_cell({CellKind::kRecord, rec.id, {}, n});
      if (c.status == CellStatus::kFail) row.pass = false;
      if (n == 0) continue;
      row.ns.push_back(n);
      row.values.push_back(c.status == CellStatus::kSkipped ? "skip" : c.lhs);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table_markdown(int which, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "## Table " << (which == 1 ? "I" : "II") << "\n\n| id | entry | note |";
  const std::vector<std::int64_t> ns = rows.empty() ? std::vector<std::int64_t>{} : rows.front().ns;
  for (auto n : ns) os << " n=" << n << " |";
  os << " status |\n|---|---|---|";
  for (std::size_t i = 0; i < ns.size(); ++i) os << "---|";
  os << "---|\n";
  for (const auto& r : rows) {
    os << "| " << r.id << " | " << r.location << " | " << r.source << " |";
    for (const auto& v : r.values) os << " " << v << " |";
    os << " " << (r.pass ? "pass" : (r.disputed ? "FAIL (disputed)" : "FAIL")) << " |\n";
  }
  return os.str();
}

nlohmann::ordered_json table_to_json(int which, const std::vector<TableRow>& rows) {
  nlohmann::ordered_json j;
  j["table"] = which;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["location"] = r.location;
    e["note"] = r.source;
    auto& values = e["values"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.ns.size(); ++i) values[std::to_string(r.ns[i])] = r.values[i];
    e["status"] = r.pass ? "pass" : "fail";
    if (r.disputed) e["disputed"] = *r.disputed;
    entries.push_back(std::move(e));
  }
  return j;
}

}  // namespace hnid
