#include "hnid/runner.hpp"

#include <algorithm>
#include <exception>
#include <tuple>

#include <omp.h>

#include "hnid/errors.hpp"

namespace hnid {

namespace {

using i64 = std::int64_t;

// Every assignment of 0..param_max to `names`, in lexicographic order.
std::vector<Params> param_grid(const std::vector<std::string>& names, i64 param_max) {
  std::vector<Params> out{Params{}};
  for (const auto& name : names) {
    std::vector<Params> next;
    for (const auto& base : out) {
      for (i64 v = 0; v <= param_max; ++v) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

void add_grid(std::vector<Cell>& out, CellKind kind, const std::string& id,
              const std::vector<std::string>& names, const GridBounds& grid,
              const GridLimits& limits) {
  const i64 pmax = limits.unsafe_large ? limits.param_max : std::min(grid.param_max, limits.param_max);
  const i64 nmax = limits.unsafe_large ? limits.n_max : std::min(grid.n_max, limits.n_max);
  for (const auto& p : param_grid(names, pmax)) {
    for (i64 n = 0; n <= nmax; ++n) out.push_back({kind, id, p, n});
  }
}

bool in_suite(RecordKind kind, Suite suite) {
  switch (suite) {
    case Suite::kAll: return true;
    case Suite::kTheorems: return kind == RecordKind::kTheorem || kind == RecordKind::kAuxiliary;
    case Suite::kTable1: return kind == RecordKind::kTableI;
    case Suite::kTable2: return kind == RecordKind::kTableII;
    default: return false;
  }
}

CellResult evaluate_record(const Cell& cell) {
  CellResult r;
  r.cell = cell;
  const IdentityRecord& rec = lookup(cell.record_id);
  if (auto v = rec.violated(cell.params, cell.n)) {
    r.status = CellStatus::kSkipped;
    r.reason = *v;
    return r;
  }
  const Rational lhs = rec.lhs(cell.n, cell.params);
  const Rational rhs = rec.rhs(cell.n, cell.params);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.status = lhs == rhs ? CellStatus::kPass : CellStatus::kFail;
  if (rec.disputed) {
    r.disputed = rec.disputed;
    r.amended_pass = lhs == rec.amended_rhs(cell.n, cell.params);
  }
  if (r.status == CellStatus::kFail) r.reason = "lhs != rhs";
  return r;
}

CellResult evaluate_family(const Cell& cell) {
  CellResult r;
  r.cell = cell;
  const BinomialFamily& fam = lookup_family(cell.record_id);
  if (auto v = fam.violated(cell.params, cell.n)) {
    r.status = CellStatus::kSkipped;
    r.reason = *v;
    return r;
  }
  const DerivationResult d = derive_via_d0(cell.record_id, cell.params, cell.n);
  r.lhs = d.lhs.value().to_string();
  r.rhs = d.rhs.value().to_string();
  r.lhs_deriv = d.lhs.deriv().to_string();
  r.rhs_deriv = d.rhs.deriv().to_string();
  if (d.value_match && d.deriv_match) {
    r.status = CellStatus::kPass;
  } else {
    r.status = CellStatus::kFail;
    r.reason = d.value_match ? "derivative parts differ" : "value parts differ";
  }
  return r;
}

CellResult evaluate_xi(const Cell& cell) {
  CellResult r;
  r.cell = cell;
  const i64 lambda = cell.params.at("lambda");
  const Rational lhs = xi_via_omega(lambda, cell.n);
  const Rational rhs = xi(lambda, cell.n);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.status = lhs == rhs ? CellStatus::kPass : CellStatus::kFail;
  if (r.status == CellStatus::kFail) r.reason = "D0{(x+n) Omega} != Xi";
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kTheorems, Suite::kTable1, Suite::kTable2, Suite::kFamilies,
                  Suite::kXi, Suite::kAll}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::kTheorems: return "theorems";
    case Suite::kTable1: return "table1";
    case Suite::kTable2: return "table2";
    case Suite::kFamilies: return "families";
    case Suite::kXi: return "xi";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::kPass: return "pass";
    case CellStatus::kFail: return "fail";
    case CellStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::vector<Cell> enumerate_cells(Suite suite, const GridLimits& limits) {
  std::vector<Cell> out;
  for (const auto& rec : registry()) {
    if (in_suite(rec.kind, suite)) {
      add_grid(out, CellKind::kRecord, rec.id, rec.param_names, rec.grid, limits);
    }
  }
  if (suite == Suite::kFamilies || suite == Suite::kAll) {
    for (const auto& fam : families()) {
      add_grid(out, CellKind::kFamily, fam.id, fam.param_names, fam.grid, limits);
    }
  }
  if (suite == Suite::kXi || suite == Suite::kAll) {
    // lambda covers the range where the representation is known (1..6) and is
    // not subject to --param-max.
    const i64 nmax = limits.unsafe_large ? limits.n_max : std::min<i64>(8, limits.n_max);
    for (i64 lambda = 1; lambda <= 6; ++lambda) {
      for (i64 n = 0; n <= nmax; ++n) {
        out.push_back({CellKind::kXi, std::string(kXiRecordId), {{"lambda", lambda}}, n});
      }
    }
  }
  return out;
}

CellResult evaluate_cell(const Cell& cell) {
  try {
    switch (cell.kind) {
      case CellKind::kRecord: return evaluate_record(cell);
      case CellKind::kFamily: return evaluate_family(cell);
      case CellKind::kXi: return evaluate_xi(cell);
    }
  } catch (const DomainError& e) {
    CellResult r;
  r.cell = cell;
    r.status = CellStatus::kFail;
    r.reason = e.what();
    return r;
  }
  throw DomainError("evaluate_cell: unknown cell kind");
}

void sort_results(std::vector<CellResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CellResult& a, const CellResult& b) {
    return std::tie(a.cell.record_id, a.cell.params, a.cell.n) <
           std::tie(b.cell.record_id, b.cell.params, b.cell.n);
  });
}

std::vector<CellResult> run_serial(const std::vector<Cell>& cells) {
  std::vector<CellResult> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(evaluate_cell(c));
  sort_results(out);
  return out;
}

std::vector<CellResult> run_parallel(const std::vector<Cell>& cells) {
  std::vector<CellResult> out(cells.size());
  std::exception_ptr first_error;
  const i64 count = static_cast<i64>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (i64 i = 0; i < count; ++i) {
    try {
      out[i] = evaluate_cell(cells[i]);
    } catch (...) {
#pragma omp critical(hnid_runner_error)
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  sort_results(out);
  return out;
}

}  // namespace hnid
