#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "identities.hpp"
#include "mf24/enumerate.hpp"
#include "mf24/errors.hpp"
#include "mf24/repnum.hpp"
#include "mf24/spaces.hpp"
#include "mf24/tables.hpp"

#ifndef MF24_DATA_DIR
#define MF24_DATA_DIR "data"
#endif

namespace mf24::cli {

using nlohmann::ordered_json;

namespace {

// Reads a signed integer at text[pos], advancing pos.
int read_int(std::string_view text, std::size_t& pos) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') {
    throw ParseError("expected an integer", pos);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc()) {
    throw ParseError("expected an integer", pos);
  }
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "'", pos);
  }
  ++pos;
}

CharacterLabel label_for_modulus(long t) {
  for (CharacterLabel c : kSpaceCharacters) {
    if (modulus_of(c) == t) {
      return c;
    }
  }
  return CharacterLabel::other;
}

}  // namespace

SeriesSpec parse_series_spec(std::string_view text) {
  if (text.starts_with("theta:")) {
    try {
      return {parse_theta_spec(text.substr(6))};
    } catch (const ParseError& e) {
      throw e.shifted(6);
    }
  }
  if (text.starts_with("E:")) {
    std::size_t pos = 2;
    EisensteinSpec spec;
    spec.t1 = read_int(text, pos);
    expect(text, pos, ',');
    spec.t2 = read_int(text, pos);
    if (pos < text.size()) {
      expect(text, pos, '@');
      const std::size_t at = pos;
      spec.dilation = read_int(text, pos);
      if (spec.dilation < 1 || 24 % spec.dilation != 0) {
        throw ParseError("dilation must divide 24", at);
      }
    }
    if (pos != text.size()) {
      throw ParseError("trailing characters", pos);
    }
    if (!EisensteinSpec::is_listed_pair(spec.t1, spec.t2)) {
      throw UnknownPair("no Eisenstein series E_{" + std::to_string(spec.t1) + "," +
                        std::to_string(spec.t2) + "}");
    }
    return {spec};
  }
  if (text.starts_with("L:")) {
    std::size_t pos = 2;
    LdSpec spec{read_int(text, pos)};
    if (pos != text.size()) {
      throw ParseError("trailing characters", pos);
    }
    return {spec};
  }
  return {parse_eta_quotient(text)};
}

QSeries SeriesSpec::expand(int prec) const {
  return std::visit(
      [&](const auto& v) -> QSeries {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, EtaQuotient>) {
          return eta_quotient_series(v, prec);
        } else if constexpr (std::is_same_v<T, ThetaProductSpec>) {
          return theta_product_series(v, prec);
        } else if constexpr (std::is_same_v<T, EisensteinSpec>) {
          return eisenstein_series(v, prec);
        } else {
          return Ld_series(v, prec);
        }
      },
      value);
}

std::optional<CharacterLabel> SeriesSpec::character() const {
  CharacterLabel c = CharacterLabel::other;
  if (const auto* f = std::get_if<EtaQuotient>(&value)) {
    c = character_label(*f);
  } else if (const auto* s = std::get_if<ThetaProductSpec>(&value)) {
    c = theta_product_character(*s);
  } else if (const auto* e = std::get_if<EisensteinSpec>(&value)) {
    c = label_for_modulus(static_cast<long>(e->t1) * e->t2);
  } else {
    c = CharacterLabel::chi1;
  }
  if (c == CharacterLabel::other) {
    return std::nullopt;
  }
  return c;
}

std::filesystem::path default_table_dir() {
  return std::filesystem::path(MF24_DATA_DIR) / "tables";
}

namespace {

struct Globals {
  int prec = kDefaultPrecision;
  int verify_to = kDefaultVerifyTo;
  bool json = false;
  bool prec_given = false;
};

ordered_json series_json(std::string_view spec, const QSeries& s) {
  ordered_json doc;
  doc["spec"] = spec;
  doc["prec"] = s.prec();
  ordered_json coeffs = ordered_json::array();
  for (int n = 0; n < s.prec(); ++n) {
    coeffs.push_back(to_string(s[n]));
  }
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

int cmd_expand(const std::string& spec, const Globals& g, std::ostream& out) {
  const QSeries s = parse_series_spec(spec).expand(g.prec);
  if (g.json) {
    out << series_json(spec, s).dump(2) << '\n';
  } else {
    out << to_string(s) << '\n';
  }
  return kSuccess;
}

int cmd_solve(const std::string& spec, const std::string& space_text, const Globals& g,
              std::ostream& out) {
  const SeriesSpec parsed = parse_series_spec(spec);
  SpaceId space;
  if (!space_text.empty()) {
    space = parse_space(space_text);
  } else if (auto c = parsed.character()) {
    space.character = *c;
  } else {
    throw InvalidEtaQuotient("cannot infer the space of " + spec + "; pass --space");
  }
  const SolveResult r = solve_in_basis(parsed.expand(g.verify_to + 1), space, g.verify_to);
  if (g.json) {
    out << to_json(r, 2) << '\n';
    return kSuccess;
  }
  out << "space " << space.name() << ", verified to q^" << r.verified_to << '\n';
  for (const auto& [label, value] : r.coefficients) {
    out << "  " << label << " = " << to_string(value) << '\n';
  }
  return kSuccess;
}

int cmd_tables(const std::string& id, const std::string& dir, const Globals& g,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = table_ids();
  } else if (std::find(table_ids().begin(), table_ids().end(), id) != table_ids().end()) {
    ids = {id};
  } else {
    err << "error: unknown table " << id << '\n';
    return kUsage;
  }
  const std::filesystem::path base = dir.empty() ? default_table_dir() : std::filesystem::path(dir);
  bool all_ok = true;
  ordered_json doc = ordered_json::array();
  for (const std::string& t : ids) {
    const TableFixture fixture = load_table_fixture(base / table_file_name(t));
    const TableReport report = verify_table(fixture, g.verify_to);
    all_ok = all_ok && report.ok();
    ordered_json entry;
    entry["table"] = t;
    entry["matched"] = report.matched();
    entry["rows"] = report.rows.size();
    ordered_json failures = ordered_json::array();
    if (!g.json) {
      out << "table " << t << ": " << report.matched() << "/" << report.rows.size()
          << " rows match\n";
    }
    for (const RowCheck& row : report.rows) {
      if (row.ok) {
        continue;
      }
      ordered_json f;
      f["row"] = row.key;
      if (!row.error.empty()) {
        f["error"] = row.error;
        if (!g.json) {
          out << "  row " << row.key << ": " << row.error << '\n';
        }
      }
      for (const CoefficientMismatch& m : row.mismatches) {
        f["mismatches"].push_back(
            {{"label", m.label}, {"expected", to_string(m.expected)}, {"actual", to_string(m.actual)}});
        if (!g.json) {
          out << "  row " << row.key << ": " << m.label << " expected " << to_string(m.expected)
              << ", computed " << to_string(m.actual) << '\n';
        }
      }
      failures.push_back(std::move(f));
    }
    entry["failures"] = std::move(failures);
    doc.push_back(std::move(entry));
  }
  if (g.json) {
    out << doc.dump(2) << '\n';
  }
  return all_ok ? kSuccess : kMismatch;
}

int cmd_identities(const Globals& g, std::ostream& out) {
  const int cusp_prec = g.prec_given ? g.prec : 100;
  const int phi_prec = g.prec_given ? g.prec : 200;
  std::vector<IdentityCheck> checks = check_cusp_identities(cusp_prec);
  checks.push_back(check_phi_eta_identity(phi_prec));
  bool all_ok = true;
  ordered_json doc = ordered_json::array();
  for (const IdentityCheck& c : checks) {
    all_ok = all_ok && c.ok;
    if (g.json) {
      ordered_json e{{"name", c.name}, {"statement", c.statement}, {"prec", c.prec}, {"ok", c.ok}};
      if (c.first_difference) {
        e["first_difference"] = *c.first_difference;
      }
      doc.push_back(std::move(e));
      continue;
    }
    out << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.statement << "  [to O(q^" << c.prec
        << ")]";
    if (c.first_difference) {
      out << " first difference at q^" << *c.first_difference;
    }
    out << '\n';
  }
  if (g.json) {
    out << doc.dump(2) << '\n';
  }
  return all_ok ? kSuccess : kMismatch;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ParseError("expected a range a..b", 0);
  }
  std::size_t pos = 0;
  const std::string_view view(text);
  const long a = read_int(view.substr(0, dots), pos);
  if (pos != dots) {
    throw ParseError("expected a range a..b", pos);
  }
  pos = dots + 2;
  const long b = read_int(view, pos);
  if (pos != text.size()) {
    throw ParseError("trailing characters", pos);
  }
  if (a < 0 || b < a) {
    throw ParseError("range must satisfy 0 <= a <= b", 0);
  }
  return {a, b};
}

int cmd_repnum(const std::string& form_text, std::optional<long> single,
               const std::string& range_text, const std::string& method, const Globals& g,
               std::ostream& out) {
  const ThetaProductSpec form = parse_theta_spec(form_text);
  long lo = 0;
  long hi = 0;
  if (single) {
    lo = hi = *single;
  } else {
    std::tie(lo, hi) = parse_range(range_text);
  }
  const bool use_formula = method != "brute";
  const bool use_brute = method != "formula";
  if (use_formula && lo < 1) {
    throw std::invalid_argument("closed formulas hold for n >= 1");
  }
  if (use_formula) {
    formula_count(form, lo);  // UnknownForm before any output
  }
  const std::vector<std::uint64_t> brute =
      use_brute ? brute_force_counts(form, hi) : std::vector<std::uint64_t>{};

  bool all_match = true;
  ordered_json rows = ordered_json::array();
  if (!single && !g.json) {
    out << "n";
    if (use_formula) out << ",formula";
    if (use_brute) out << ",brute_force";
    if (use_formula && use_brute) out << ",match";
    out << '\n';
  }
  for (long n = lo; n <= hi; ++n) {
    std::string f;
    std::string b;
    bool match = true;
    if (use_formula) {
      f = to_string(formula_count(form, n));
    }
    if (use_brute) {
      b = std::to_string(brute[n]);
    }
    if (use_formula && use_brute) {
      match = f == b;
      all_match = all_match && match;
    }
    if (g.json) {
      ordered_json row{{"n", n}};
      if (use_formula) row["formula"] = f;
      if (use_brute) row["brute_force"] = b;
      if (use_formula && use_brute) row["match"] = match;
      rows.push_back(std::move(row));
    } else if (single) {
      out << "N(" << to_string(form) << "; " << n << "):";
      if (use_formula) out << " formula=" << f;
      if (use_brute) out << " brute_force=" << b;
      if (use_formula && use_brute) out << " match=" << (match ? "yes" : "no");
      out << '\n';
    } else {
      out << n;
      if (use_formula) out << ',' << f;
      if (use_brute) out << ',' << b;
      if (use_formula && use_brute) out << ',' << (match ? "yes" : "no");
      out << '\n';
    }
  }
  if (g.json) {
    out << rows.dump(2) << '\n';
  }
  return all_match ? kSuccess : kMismatch;
}

ordered_json quotient_json(const EtaQuotient& f) {
  ordered_json ex = ordered_json::object();
  const std::vector<int> ds = divisors(f.level());
  const std::vector<int> rs = f.exponent_vector();
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ex[std::to_string(ds[i])] = rs[i];
  }
  return ex;
}

int cmd_enumerate(const std::string& character_text, bool eisenstein_only, bool new_only,
                  const std::string& out_path, int jobs, const Globals& g, std::ostream& out) {
  const CharacterLabel c = parse_character(character_text);
  if (c == CharacterLabel::other) {
    throw std::invalid_argument("character must be one of 1, 8, 12, 24");
  }
  const SpaceId space{c, Subspace::M};
  const std::vector<EtaQuotient> all = enumerate_eta_quotients(c, {jobs, 64});

  ordered_json rows = ordered_json::array();
  std::vector<std::string> lines;
  for (const EtaQuotient& f : all) {
    const SolveResult sol =
        solve_in_basis(eta_quotient_series(f, g.verify_to + 1), space, g.verify_to);
    const bool eis = eisenstein_cusp_split(sol).is_eisenstein();
    const auto origin = lower_level_origin(f);
    if ((eisenstein_only && !eis) || (new_only && origin)) {
      continue;
    }
    ordered_json row;
    row["exponents"] = quotient_json(f);
    ordered_json coeffs = ordered_json::object();
    for (const auto& [label, value] : sol.coefficients) {
      coeffs[label] = to_string(value);
    }
    row["coefficients"] = std::move(coeffs);
    row["eisenstein"] = eis;
    if (origin) {
      row["arises_from"] = {{"level", origin->level}, {"dilation", origin->dilation}};
    } else {
      row["arises_from"] = nullptr;
    }
    rows.push_back(std::move(row));

    std::string line;
    for (int r : f.exponent_vector()) {
      line += (line.empty() ? "" : ",") + std::to_string(r);
    }
    lines.push_back(std::move(line));
  }

  ordered_json doc;
  doc["character"] = name_of(c);
  doc["eisenstein_only"] = eisenstein_only;
  doc["new_only"] = new_only;
  doc["count"] = rows.size();
  doc["rows"] = std::move(rows);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      throw std::invalid_argument("cannot write " + out_path);
    }
    file << doc.dump(2) << '\n';
  }
  if (g.json) {
    out << doc.dump(2) << '\n';
  } else {
    for (const std::string& line : lines) {
      out << line << '\n';
    }
    out << "# " << lines.size() << " eta quotients in " << space.name() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-expansions, bases and eta quotients for weight 2 and level 24", "mf24"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* prec_opt = app.add_option("--prec", g.prec, "Series precision (coefficients kept)")
                       ->check(CLI::NonNegativeNumber);
  app.add_option("--verify-to", g.verify_to, "Highest coefficient checked after a solve")
      ->check(CLI::Range(8, 100000));
  app.add_flag("--json", g.json, "Machine-readable output");

  std::string spec;
  auto* expand = app.add_subcommand("expand", "Print a q-expansion");
  expand->add_option("spec", spec, "eta quotient, theta:a,b,c,d, E:t1,t2[@m] or L:d")->required();

  std::string solve_spec;
  std::string space_text;
  auto* solve = app.add_subcommand("solve", "Coefficients of a form in the space basis");
  solve->add_option("spec", solve_spec, "Series, as for expand")->required();
  solve->add_option("--space", space_text, "chi1, chi8, chi12, chi24 (E:/S: for subspaces)");

  std::string table_id = "all";
  std::string table_dir;
  auto* tables = app.add_subcommand("tables", "Recompute the shipped coefficient tables");
  tables->add_option("table", table_id, "3.1, 3.2, 3.3, 3.4, 5.1, 5.2 or all");
  tables->add_option("--dir", table_dir, "Directory holding table_*.json");

  auto* identities = app.add_subcommand("identities", "Check the theta/eta identities");

  std::string form_text;
  std::optional<long> single_n;
  std::string range_text;
  std::string method = "both";
  auto* repnum = app.add_subcommand("repnum", "Representation numbers of a diagonal form");
  repnum->add_option("--form", form_text, "a1,a2,a3,a4")->required();
  auto* n_opt = repnum->add_option("--n", single_n, "Single n");
  auto* range_opt = repnum->add_option("--range", range_text, "a..b, printed as CSV");
  n_opt->excludes(range_opt);
  repnum->add_option("--method", method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));

  std::string character_text;
  bool eisenstein_only = false;
  bool new_only = false;
  std::string out_path;
  int jobs = 1;
  auto* enumerate = app.add_subcommand("enumerate", "All holomorphic eta quotients of a space");
  enumerate->add_option("--character", character_text, "1, 8, 12 or 24")->required();
  enumerate->add_flag("--eisenstein-only", eisenstein_only, "Keep quotients in E_2 only");
  enumerate->add_flag("--new-only", new_only,
                      "Drop quotients that are dilations of level-12 or level-8 quotients");
  enumerate->add_option("--out", out_path, "Also write the JSON rows to this file");
  enumerate->add_option("--jobs", jobs, "Search threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  g.prec_given = prec_opt->count() > 0;
  if (repnum->parsed() && !single_n && range_text.empty()) {
    err << "error: repnum needs --n or --range\n";
    return kUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(spec, g, out);
    if (solve->parsed()) return cmd_solve(solve_spec, space_text, g, out);
    if (tables->parsed()) return cmd_tables(table_id, table_dir, g, out, err);
    if (identities->parsed()) return cmd_identities(g, out);
    if (repnum->parsed()) return cmd_repnum(form_text, single_n, range_text, method, g, out);
    if (enumerate->parsed()) {
      return cmd_enumerate(character_text, eisenstein_only, new_only, out_path, jobs, g, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mf24::cli
