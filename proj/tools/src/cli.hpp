#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mf24/arith.hpp"
#include "mf24/etafunc.hpp"
#include "mf24/qseries.hpp"
#include "mf24/theta.hpp"

namespace mf24::cli {

enum ExitCode : int { kSuccess = 0, kMismatch = 1, kUsage = 2 };

/// A series named on the command line: an eta quotient "2:1,4:1,6:1,12:1",
/// "theta:1,2,3,6", "E:1,8@3" for E_{1,8}(3z), or "L:4".
struct SeriesSpec {
  std::variant<EtaQuotient, ThetaProductSpec, EisensteinSpec, LdSpec> value;

  QSeries expand(int prec) const;
  /// Character of the space the series lies in, when it can be read off.
  std::optional<CharacterLabel> character() const;
};

/// Throws ParseError with the offset into `text`.
SeriesSpec parse_series_spec(std::string_view text);

/// Directory holding table_*.json; set at configure time.
std::filesystem::path default_table_dir();

/// Runs the tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mf24::cli
