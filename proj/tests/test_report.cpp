#include <gtest/gtest.h>

#include <regex>

#include "hnid/exactnum.hpp"
#include "hnid/report.hpp"

namespace hnid {
namespace {

TEST(Report, SummaryMatchesCells) {
  const auto results = run_serial(enumerate_cells(Suite::kTable1, {3, 3}));
  const auto report = make_report("table1", results, "2000-01-01T00:00:00Z");
  std::int64_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : report.cells) {
    pass += c.status == CellStatus::kPass;
    fail += c.status == CellStatus::kFail;
    skip += c.status == CellStatus::kSkipped;
  }
  EXPECT_EQ(report.summary.total, static_cast<std::int64_t>(report.cells.size()));
  EXPECT_EQ(report.summary.passed, pass);
  EXPECT_EQ(report.summary.failed, fail);
  EXPECT_EQ(report.summary.skipped, skip);
}

TEST(Report, JsonKeepsRationalsAsStrings) {
  const auto results = run_serial(enumerate_cells(Suite::kTable2, {3, 3}));
  const auto j = to_json(make_report("table2", results, "2000-01-01T00:00:00Z"));
  EXPECT_EQ(j["suite"], "table2");
  EXPECT_EQ(j["generated_at"], "2000-01-01T00:00:00Z");
  for (const auto& c : j["cells"]) {
    ASSERT_TRUE(c["lhs"].is_string());
    if (c["status"] == "skipped") {
      EXPECT_FALSE(c["reason"].get<std::string>().empty());
      continue;
    }
    const auto lhs = Rational::parse(c["lhs"].get<std::string>());
    EXPECT_EQ(lhs.to_string(), c["lhs"].get<std::string>());
  }
}

TEST(Report, RenderIsDeterministicModuloTimestamp) {
  const auto cells = enumerate_cells(Suite::kXi, {4, 3});
  const auto a = render_json(make_report("xi", run_parallel(cells), "A"));
  const auto b = render_json(make_report("xi", run_serial(cells), "B"));
  const std::regex stamp("\"generated_at\": \"[^\"]*\"");
  EXPECT_EQ(std::regex_replace(a, stamp, ""), std::regex_replace(b, stamp, ""));
}

TEST(Report, TimestampShape) {
  EXPECT_TRUE(std::regex_match(utc_timestamp(), std::regex(R"(\d{4}-\d\d-\d\dT\d\d:\d\d:\d\dZ)")));
}

TEST(Table, RowsAndRendering) {
  const auto rows1 = build_table(1, 2);
  EXPECT_EQ(rows1.size(), 26u);
  const std::string md = render_table_markdown(1, rows1);
  EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 4 + 26);
  EXPECT_NE(md.find("| t1e9 | Table I, Entry 9 |"), std::string::npos);
  const auto rows2 = build_table(2, 1);
  EXPECT_EQ(table_to_json(2, rows2)["entries"].size(), 21u);
  EXPECT_THROW(build_table(3, 1), DomainError);
}

}  // namespace
}  // namespace hnid
