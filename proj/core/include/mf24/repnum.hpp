#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mf24/rational.hpp"
#include "mf24/spaces.hpp"
#include "mf24/theta.hpp"

namespace mf24 {

/// Number of (x1..x4) in Z^4 with a1 x1^2 + a2 x2^2 + a3 x3^2 + a4 x4^2 = n,
/// by direct enumeration of the bounded box.
std::uint64_t brute_force_count(const ThetaProductSpec& s, long n);

/// brute_force_count for every 0 <= n <= n_max, by enumerating all lattice
/// points with value at most n_max.
std::vector<std::uint64_t> brute_force_counts(const ThetaProductSpec& s, long n_max);

/// Fourier coefficients of the level-24 cusp forms A, B1, B2, C1, C2.
enum class CuspSequence { a, b1, b2, c1, c2 };

std::string name_of(CuspSequence seq);

class CuspCoefficients {
 public:
  /// Expands the five eta quotients through q^{n_max}.
  explicit CuspCoefficients(long n_max);

  long n_max() const noexcept { return n_max_; }

  /// Coefficient of q^n; n must lie in [0, n_max].
  const Rational& value(CuspSequence seq, long n) const;

 private:
  long n_max_;
  std::vector<QSeries> series_;
};

/// Shared table covering at least n_max. Safe to call concurrently.
std::shared_ptr<const CuspCoefficients> cusp_coefficients(long n_max);

/// One summand of a representation-number formula: either
/// coefficient * sigma_{(chi_t1, chi_t2)}(n / divisor) or
/// coefficient * cusp_sequence(n).
struct RepTerm {
  enum class Kind { sigma, cusp };

  Kind kind = Kind::sigma;
  int t1 = 1;
  int t2 = 1;
  int divisor = 1;
  CuspSequence sequence = CuspSequence::a;
  Rational coefficient;

  friend bool operator==(const RepTerm&, const RepTerm&) = default;
};

/// Closed form for N(a1, a2, a3, a4; n), n >= 1.
struct RepFormula {
  ThetaProductSpec form;
  std::vector<RepTerm> terms;

  /// Evaluates the formula at n >= 1.
  Rational evaluate(long n, const CuspCoefficients& cusp) const;
  Rational evaluate(long n) const;

  /// Merges like terms, drops zero ones and sorts into a canonical order.
  RepFormula canonical() const;

  friend bool operator==(const RepFormula& a, const RepFormula& b);
};

/// "8*sigma(n) - 32*sigma(n/4)", "16/5*sigma[1,8](n) + ... + 8/5*b1(n)".
std::string to_string(const RepFormula& f);

/// The 26 primitive forms (gcd 1, nondecreasing) with entries in {1,2,3,6}.
std::vector<ThetaProductSpec> normalized_forms();

/// The closed forms as printed in the source, one per normalized form,
/// transcribed without correction.
std::vector<RepFormula> printed_formulas();

/// printed_formulas() with each logged correction applied (see CORRECTIONS.md).
std::vector<RepFormula> corrected_formulas();

/// Forms whose printed formula was replaced in corrected_formulas().
std::vector<ThetaProductSpec> corrected_forms();

/// Formula read off from the basis coefficients of the theta product.
RepFormula formula_from_solution(const ThetaProductSpec& s, const SolveResult& solution);

/// Solve-generated formula for any of the 35 level-24 theta products.
RepFormula generated_formula(const ThetaProductSpec& s, int verify_to = kDefaultVerifyTo);

/// Solve-generated formulas for the 26 normalized forms.
std::vector<RepFormula> formula_table(int verify_to = kDefaultVerifyTo);

struct FormulaDiscrepancy {
  RepFormula printed;
  RepFormula generated;
};

/// Normalized forms whose printed formula differs from the generated one.
std::vector<FormulaDiscrepancy> printed_formula_discrepancies(int verify_to = kDefaultVerifyTo);

/// N(a1..a4; n) from the closed form. Normalized forms use the corrected
/// printed formulas; the remaining quadruples of the 35 theta products use
/// the solve-generated formula. Throws UnknownForm otherwise.
Rational formula_count(const ThetaProductSpec& s, long n);

}  // namespace mf24
