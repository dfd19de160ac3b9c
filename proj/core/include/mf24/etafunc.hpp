#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mf24/arith.hpp"
#include "mf24/qseries.hpp"
#include "mf24/rational.hpp"

namespace mf24 {

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Eta quotient  prod_{delta | N} eta(delta z)^{r_delta}  of level N.
///
/// Divisors with exponent zero are not stored, so two quotients compare
/// equal exactly when their exponent maps agree.
class EtaQuotient {
 public:
  /// Throws InvalidEtaQuotient if a key does not divide `level`.
  explicit EtaQuotient(std::map<int, int> exponents, int level = 24);

  /// Exponents listed against divisors(level), in order.
  static EtaQuotient from_vector(const std::vector<int>& exponents, int level = 24);

  int level() const noexcept { return level_; }
  const std::map<int, int>& exponents() const noexcept { return exponents_; }
  int exponent(int delta) const;

  /// r_delta for each divisor of the level, in increasing divisor order.
  std::vector<int> exponent_vector() const;

  /// (sum r_delta) / 2.
  Rational weight() const;

  /// sum delta * r_delta / 24, the exponent of the q-power prefactor.
  Rational leading_exponent() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
  friend bool operator<(const EtaQuotient& a, const EtaQuotient& b) {
    return a.exponent_vector() < b.exponent_vector();
  }

 private:
  int level_;
  std::map<int, int> exponents_;
};

/// The quotients spanning the cusp spaces of level 24: A (trivial
/// character), B1 and B2 (chi8), C1 and C2 (chi24).
EtaQuotient eta_A();
EtaQuotient eta_B1();
EtaQuotient eta_B2();
EtaQuotient eta_C1();
EtaQuotient eta_C2();

/// eta^5(2z) / (eta^2(z) eta^2(4z)), which equals phi(z).
EtaQuotient eta_phi_identity();

/// "2:1,4:1,6:1,12:1". Throws ParseError.
EtaQuotient parse_eta_quotient(std::string_view text, int level = 24);
std::string to_string(const EtaQuotient& f);

/// prod_{n >= 1} (1 - q^{delta n}) to precision `prec`, by the finite
/// product. The q^{delta/24} prefactor is not included.
QSeries eta_series(int delta, int prec);

/// Same series from Euler's pentagonal number theorem.
QSeries eta_series_pentagonal(int delta, int prec);

/// Full expansion q^e prod eta_series(delta)^{r_delta}.
/// Throws FractionalExponent if e is not an integer and NegativeValuation if
/// e < 0.
QSeries eta_quotient_series(const EtaQuotient& f, int prec);

/// Fundamental discriminant D of the character d -> ((-1)^k prod delta^{r_delta} | d)
/// attached to f. Requires integral weight (NonIntegralWeight otherwise).
long character_discriminant(const EtaQuotient& f);

/// The label chi_t whose values agree with the character of f on residues
/// coprime to 24; `other` when none of the four does.
CharacterLabel character_label(const EtaQuotient& f);

struct CuspOrder {
  int denominator;   // c | N, representing the cusps 1/c-type class
  Rational order;    // order of vanishing in the local uniformizer
  int width;         // N / (c gcd(c, N/c))
  int multiplicity;  // number of inequivalent cusps with denominator c
};

struct CuspOrderReport {
  std::vector<CuspOrder> cusps;  // increasing denominator

  const CuspOrder& at(int denominator) const;

  /// Sum of order * multiplicity over all cusps; equals k [SL2(Z) : Gamma0(N)] / 12.
  Rational total_order() const;
};

/// Index of Gamma0(N) in SL2(Z).
int gamma0_index(int level);

/// Ligozat's order at each cusp class:
/// (N/24) sum_delta gcd(c, delta)^2 r_delta / (gcd(c, N/c) c delta).
CuspOrderReport cusp_orders(const EtaQuotient& f);

/// True iff every cusp order is non-negative. Throws NonIntegralWeight.
bool is_holomorphic_modular_form(const EtaQuotient& f);

/// sum delta r_delta = 0 (mod 24) and sum (N/delta) r_delta = 0 (mod 24).
bool satisfies_eta_congruences(const EtaQuotient& f);

}  // namespace mf24
