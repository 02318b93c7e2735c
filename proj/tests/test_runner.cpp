#include <gtest/gtest.h>

#include <omp.h>

#include <algorithm>
#include <tuple>

#include "hnid/runner.hpp"

namespace hnid {
namespace {

bool same(const CellResult& a, const CellResult& b) {
  return a.cell.record_id == b.cell.record_id && a.cell.params == b.cell.params &&
         a.cell.n == b.cell.n && a.status == b.status && a.reason == b.reason && a.lhs == b.lhs &&
         a.rhs == b.rhs && a.lhs_deriv == b.lhs_deriv && a.rhs_deriv == b.rhs_deriv &&
         a.amended_pass == b.amended_pass;
}

TEST(Suite, ParseRoundTrip) {
  for (const char* name : {"theorems", "table1", "table2", "families", "xi", "all"}) {
    ASSERT_TRUE(parse_suite(name));
    EXPECT_EQ(to_string(*parse_suite(name)), name);
  }
  EXPECT_FALSE(parse_suite("bogus"));
}

TEST(Enumerate, GridsFollowRecordBounds) {
  const auto t1 = enumerate_cells(Suite::kTable1);
  EXPECT_EQ(t1.size(), 26u * 9u);
  const auto t2 = enumerate_cells(Suite::kTable2);
  EXPECT_EQ(t2.size(), 21u * 7u);
  const auto xi = enumerate_cells(Suite::kXi);
  EXPECT_EQ(xi.size(), 6u * 9u);
  const auto capped = enumerate_cells(Suite::kTable1, {2, 3});
  EXPECT_EQ(capped.size(), 26u * 3u);
  // caps never grow a grid unless unsafe_large is set
  EXPECT_EQ(enumerate_cells(Suite::kTable2, {8, 3}).size(), 21u * 7u);
  EXPECT_EQ(enumerate_cells(Suite::kTable2, {8, 3, true}).size(), 21u * 9u);
}

TEST(Evaluate, SkippedCellsNameTheConstraint) {
  const auto r = evaluate_cell({CellKind::kRecord, "thm2", {{"lambda", 1}, {"mu", 0}, {"nu", 0}}, 2});
  EXPECT_EQ(r.status, CellStatus::kSkipped);
  EXPECT_EQ(r.reason, "lambda > 1 + mu + nu");
  const auto s = evaluate_cell({CellKind::kRecord, "t1e25", {}, 1});
  EXPECT_EQ(s.status, CellStatus::kSkipped);
  EXPECT_EQ(s.reason, "n > 1");
}

TEST(Evaluate, DisputedCellsCarryTheAmendment) {
  const auto r = evaluate_cell({CellKind::kRecord, "t1e5", {}, 2});
  EXPECT_EQ(r.status, CellStatus::kFail);
  ASSERT_TRUE(r.disputed);
  ASSERT_TRUE(r.amended_pass);
  EXPECT_TRUE(*r.amended_pass);
}

TEST(Evaluate, FamilyCellsCarryDerivatives) {
  const auto r = evaluate_cell({CellKind::kFamily, "dd_2", {{"b", 1}, {"d", 2}}, 3});
  EXPECT_EQ(r.status, CellStatus::kPass);
  ASSERT_TRUE(r.lhs_deriv && r.rhs_deriv);
  EXPECT_EQ(*r.lhs_deriv, *r.rhs_deriv);
}

TEST(Runner, ParallelMatchesSerialReference) {
  auto cells = enumerate_cells(Suite::kAll, {4, 2});
  std::reverse(cells.begin(), cells.end());
  const auto serial = run_serial(cells);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const auto parallel = run_parallel(cells);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_TRUE(same(serial[i], parallel[i])) << serial[i].cell.record_id << " n=" << serial[i].cell.n;
    }
  }
}

TEST(Runner, ResultsAreOrdered) {
  auto cells = enumerate_cells(Suite::kTheorems, {3, 1});
  std::reverse(cells.begin(), cells.end());
  const auto results = run_parallel(cells);
  EXPECT_TRUE(std::is_sorted(results.begin(), results.end(), [](const auto& a, const auto& b) {
    return std::tie(a.cell.record_id, a.cell.params, a.cell.n) <
           std::tie(b.cell.record_id, b.cell.params, b.cell.n);
  }));
}

}  // namespace
}  // namespace hnid
