#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mf24/etafunc.hpp"
#include "mf24/spaces.hpp"
#include "mf24/theta.hpp"

namespace mf24 {

/// One printed row: the subject (a theta product or an eta quotient) and its
/// coefficients against the listed columns.
struct TableRow {
  std::string key;
  std::variant<ThetaProductSpec, EtaQuotient> subject;
  std::vector<std::pair<std::string, Rational>> coefficients;
};

struct TableFixture {
  std::string id;  // "3.1"
  int version = 0;
  SpaceId space;
  std::string provenance;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
};

/// Ids of the shipped fixtures, in order.
const std::vector<std::string>& table_ids();

/// "3.1" -> "table_3_1.json".
std::string table_file_name(std::string_view id);

/// Parses fixture JSON. Throws FixtureError on schema violations, including
/// columns that are not labels of the space basis.
TableFixture parse_table_fixture(std::string_view json_text);
TableFixture load_table_fixture(const std::filesystem::path& file);

struct CoefficientMismatch {
  std::string label;
  Rational expected;
  Rational actual;
};

struct RowCheck {
  std::string key;
  bool ok = false;
  std::vector<CoefficientMismatch> mismatches;
  /// Set when the solve itself failed (NotInSpace and similar).
  std::string error;
};

struct TableReport {
  std::string id;
  std::vector<RowCheck> rows;

  std::size_t matched() const;
  bool ok() const { return matched() == rows.size(); }
};

/// Recomputes each row with solve_in_basis, verified to `verify_to`, and
/// compares every basis coefficient; labels without a column must be 0.
TableReport verify_table(const TableFixture& fixture, int verify_to = kDefaultVerifyTo);

}  // namespace mf24
