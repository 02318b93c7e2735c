#pragma once

// Grid enumeration and cell evaluation for the verification suites. Cells are
// independent, so the parallel runner fans them out with OpenMP; the serial
// runner is the reference it is tested against.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnid/identities.hpp"

namespace hnid {

enum class Suite { kTheorems, kTable1, kTable2, kFamilies, kXi, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

enum class CellKind { kRecord, kFamily, kXi };

struct Cell {
  CellKind kind = CellKind::kRecord;
  std::string record_id;
  Params params;
  std::int64_t n = 0;
};

enum class CellStatus { kPass, kFail, kSkipped };

std::string_view to_string(CellStatus status);

struct CellResult {
  Cell cell;
  CellStatus status = CellStatus::kFail;
  std::string reason;  // violated constraint when skipped, error text on failure
  std::string lhs;
  std::string rhs;
  // Family cells are evaluated at the dual point 0 + eps; these hold the
  // derivative parts, lhs/rhs the value parts.
  std::optional<std::string> lhs_deriv;
  std::optional<std::string> rhs_deriv;
  std::optional<std::string> disputed;
  std::optional<bool> amended_pass;
};

// Caps on the per-record grids. By default they only shrink the documented
// grids; with unsafe_large they replace them.
struct GridLimits {
  std::int64_t n_max = 8;
  std::int64_t param_max = 3;
  bool unsafe_large = false;
};

// Identifier used for the Xi/Omega cells.
inline constexpr std::string_view kXiRecordId = "xi_omega";

std::vector<Cell> enumerate_cells(Suite suite, const GridLimits& limits = {});

// Never throws for in-range input: domain errors become failed cells.
CellResult evaluate_cell(const Cell& cell);

// Both return results ordered by (record_id, params, n).
std::vector<CellResult> run_serial(const std::vector<Cell>& cells);
std::vector<CellResult> run_parallel(const std::vector<Cell>& cells);

void sort_results(std::vector<CellResult>& results);

}  // namespace hnid
