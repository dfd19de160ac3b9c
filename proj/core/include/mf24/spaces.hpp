#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mf24/arith.hpp"
#include "mf24/etafunc.hpp"
#include "mf24/qseries.hpp"

namespace mf24 {

enum class Subspace { M, E, S };

/// M_2, E_2 or S_2 of Gamma0(24) with one of the four quadratic characters.
struct SpaceId {
  static constexpr int kLevel = 24;
  static constexpr int kWeight = 2;

  CharacterLabel character = CharacterLabel::chi1;
  Subspace subspace = Subspace::M;

  /// dim S_2 = 1, 2, 0, 2 and dim E_2 = 7, 4, 8, 4 for chi1, chi8, chi12, chi24.
  int dimension() const;

  /// "chi8" for the full space; "E:chi8" / "S:chi8" for the subspaces.
  std::string name() const;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// Inverse of SpaceId::name(); also accepts bare "8". Throws ParseError.
SpaceId parse_space(std::string_view text);

/// floor(k [SL2(Z) : Gamma0(N)] / 12); 8 for every space here.
int sturm_bound(const SpaceId& space);

struct BasisElement {
  enum class Kind { eisenstein, cusp };

  std::string label;
  Kind kind;
  std::variant<LdSpec, EisensteinSpec, EtaQuotient> generator;
  QSeries series;
};

struct Basis {
  SpaceId space;
  int prec = 0;
  std::vector<BasisElement> elements;

  std::size_t size() const noexcept { return elements.size(); }
  std::vector<std::string> labels() const;
  /// Index of the element labelled `label`, or -1.
  int index_of(std::string_view label) const;
};

/// The ordered basis of the space expanded to precision `prec`
/// (prec >= sturm_bound + 1). Expansions are cached per (character, prec).
Basis basis_for(const SpaceId& space, int prec);

/// Rank of the coefficient matrix of the basis on q^0 .. q^{last}.
std::size_t basis_rank(const SpaceId& space, int last);

/// sum_i coefficients[i] * basis.elements[i].series.
QSeries linear_combination(const Basis& basis, const std::vector<Rational>& coefficients);

struct SolveResult {
  SpaceId space;
  /// One entry per basis element, in basis order.
  std::vector<std::pair<std::string, Rational>> coefficients;
  /// Highest coefficient index at which the solution was checked.
  int verified_to = 0;

  /// Coefficient of the labelled basis element; throws std::out_of_range.
  const Rational& coefficient(std::string_view label) const;
  std::vector<Rational> values() const;
};

/// Default highest coefficient index checked after the Sturm-bound solve.
inline constexpr int kDefaultVerifyTo = 60;

/// Solves target = sum b_i basis_i on q^0 .. q^{sturm bound}, then checks
/// the solution on every coefficient up to `verify_to`.
///
/// Requires target.prec() > verify_to >= sturm_bound (PrecisionError).
/// Throws NotInSpace when the system is inconsistent or the verification
/// fails, AmbiguousSolution when the equations do not fix the coefficients.
SolveResult solve_in_basis(const QSeries& target, const SpaceId& space,
                           int verify_to = kDefaultVerifyTo);

struct EisensteinCuspSplit {
  std::vector<std::pair<std::string, Rational>> eisenstein;
  std::vector<std::pair<std::string, Rational>> cusp;

  /// True when every cusp-form coefficient is zero.
  bool is_eisenstein() const;
};

EisensteinCuspSplit eisenstein_cusp_split(const SolveResult& solution);
EisensteinCuspSplit eisenstein_cusp_split(const QSeries& target, const SpaceId& space,
                                          int verify_to = kDefaultVerifyTo);

/// {"space": "chi8", "coefficients": {"E_{1,8}(z)": "8", ...}, "verified_to": 60}
std::string to_json(const SolveResult& result, int indent = -1);

}  // namespace mf24
