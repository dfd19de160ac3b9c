#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mf24/errors.hpp"
#include "mf24/tables.hpp"

using namespace mf24;

namespace {

std::filesystem::path data_dir() { return std::filesystem::path(MF24_DATA_DIR) / "tables"; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Tables, EveryFixtureMatches) {
  const std::pair<std::string, std::size_t> sizes[] = {{"3.1", 11}, {"3.2", 8}, {"3.3", 8},
                                                       {"3.4", 8},  {"5.1", 32}, {"5.2", 8}};
  for (const auto& [id, rows] : sizes) {
    const TableFixture fx = load_table_fixture(data_dir() / table_file_name(id));
    EXPECT_EQ(fx.id, id);
    EXPECT_EQ(fx.version, 1);
    ASSERT_EQ(fx.rows.size(), rows) << id;
    const TableReport report = verify_table(fx);
    EXPECT_TRUE(report.ok()) << id << ": " << report.matched() << "/" << rows;
  }
}

TEST(Tables, FileNames) {
  EXPECT_EQ(table_file_name("3.1"), "table_3_1.json");
  EXPECT_EQ(table_ids().size(), 6u);
}

TEST(Tables, EditedValueIsReportedByRow) {
  std::string text = read_file(data_dir() / "table_3_2.json");
  TableFixture fx = parse_table_fixture(text);
  auto& [label, value] = fx.rows[2].coefficients.front();
  value += 1;
  const TableReport report = verify_table(fx);
  EXPECT_EQ(report.matched(), 7u);
  ASSERT_EQ(report.rows[2].mismatches.size(), 1u);
  EXPECT_EQ(report.rows[2].mismatches[0].label, label);
  EXPECT_EQ(report.rows[2].mismatches[0].actual + 1, report.rows[2].mismatches[0].expected);
}

TEST(Tables, CliExitsOneOnMismatch) {
  const auto dir = std::filesystem::temp_directory_path() / "mf24_tables_test";
  std::filesystem::create_directories(dir);
  std::string text = read_file(data_dir() / "table_3_1.json");
  const std::string needle = "\"L_4\": \"8\"";
  const auto at = text.find(needle);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, needle.size(), "\"L_4\": \"9\"");
  std::ofstream(dir / "table_3_1.json") << text;

  std::ostringstream out, err;
  const int code = cli::run_cli({"tables", "3.1", "--dir", dir.string()}, out, err);
  EXPECT_EQ(code, cli::kMismatch);
  EXPECT_NE(out.str().find("10/11 rows match"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("row 1,1,1,1: L_4 expected 9, computed 8"), std::string::npos)
      << out.str();
  std::filesystem::remove_all(dir);
}

TEST(Tables, UnknownColumnIsAFixtureError) {
  std::string text = read_file(data_dir() / "table_3_2.json");
  const auto at = text.find("\"B_1\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 5, "\"B_9\"");
  EXPECT_THROW(parse_table_fixture(text), FixtureError);
  EXPECT_THROW(parse_table_fixture("{\"table\": \"3.1\"}"), FixtureError);
}
