#include "mf24/tables.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mf24/errors.hpp"

namespace mf24 {

using nlohmann::json;

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids{"3.1", "3.2", "3.3", "3.4", "5.1", "5.2"};
  return ids;
}

std::string table_file_name(std::string_view id) {
  std::string stem(id);
  std::replace(stem.begin(), stem.end(), '.', '_');
  return "table_" + stem + ".json";
}

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FixtureError(std::string("fixture lacks \"") + key + "\"");
  }
  return doc.at(key);
}

std::string require_string(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_string()) {
    throw FixtureError(std::string("fixture field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

Rational read_value(const json& v, const std::string& where) {
  try {
    if (v.is_string()) {
      return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
      return Rational(v.get<long>());
    }
  } catch (const ParseError& e) {
    throw FixtureError(where + ": " + e.what());
  }
  throw FixtureError(where + ": coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

TableFixture parse_table_fixture(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw FixtureError(std::string("fixture is not valid JSON: ") + e.what());
  }

  TableFixture t;
  t.id = require_string(doc, "table");
  t.provenance = require_string(doc, "provenance");
  const json& version = require(doc, "version");
  if (!version.is_number_integer()) {
    throw FixtureError("fixture version must be an integer");
  }
  t.version = version.get<int>();
  try {
    t.space = parse_space(require_string(doc, "space"));
  } catch (const ParseError& e) {
    throw FixtureError(std::string("fixture space: ") + e.what());
  }
  const std::string kind = require_string(doc, "kind");
  if (kind != "theta" && kind != "eta") {
    throw FixtureError("fixture kind must be \"theta\" or \"eta\"");
  }

  const Basis basis = basis_for(t.space, sturm_bound(t.space) + 1);
  for (const json& c : require(doc, "columns")) {
    if (!c.is_string() || basis.index_of(c.get<std::string>()) < 0) {
      throw FixtureError("column " + c.dump() + " is not a basis label of " + t.space.name());
    }
    t.columns.push_back(c.get<std::string>());
  }

  const char* key_field = kind == "theta" ? "form" : "eta";
  for (const json& r : require(doc, "rows")) {
    const std::string key = require_string(r, key_field);
    std::variant<ThetaProductSpec, EtaQuotient> subject = ThetaProductSpec({1, 1, 1, 1});
    try {
      if (kind == "theta") {
        subject = parse_theta_spec(key);
      } else {
        subject = parse_eta_quotient(key);
      }
    } catch (const std::exception& e) {
      throw FixtureError("row " + key + ": " + e.what());
    }
    TableRow row{key, std::move(subject), {}};
    const json& coeffs = require(r, "coefficients");
    if (!coeffs.is_object() || coeffs.size() != t.columns.size()) {
      throw FixtureError("row " + row.key + ": expected one coefficient per column");
    }
    for (const std::string& c : t.columns) {
      if (!coeffs.contains(c)) {
        throw FixtureError("row " + row.key + ": missing column " + c);
      }
      row.coefficients.emplace_back(c, read_value(coeffs.at(c), "row " + row.key + ", " + c));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TableFixture load_table_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw FixtureError("cannot open fixture " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_fixture(buf.str());
}

std::size_t TableReport::matched() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok; }));
}

TableReport verify_table(const TableFixture& fixture, int verify_to) {
  TableReport report{fixture.id, {}};
  for (const TableRow& row : fixture.rows) {
    RowCheck check{row.key, false, {}, {}};
    try {
      const QSeries target = std::visit(
          [&](const auto& s) -> QSeries {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, ThetaProductSpec>) {
              return theta_product_series(s, verify_to + 1);
            } else {
              return eta_quotient_series(s, verify_to + 1);
            }
          },
          row.subject);
      const SolveResult sol = solve_in_basis(target, fixture.space, verify_to);
      for (const auto& [label, actual] : sol.coefficients) {
        Rational expected(0);
        for (const auto& [col, value] : row.coefficients) {
          if (col == label) {
            expected = value;
          }
        }
        if (expected != actual) {
          check.mismatches.push_back({label, expected, actual});
        }
      }
      check.ok = check.mismatches.empty();
    } catch (const Error& e) {
      check.error = e.what();
    }
    report.rows.push_back(std::move(check));
  }
  return report;
}

}  // namespace mf24
