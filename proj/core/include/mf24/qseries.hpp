#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mf24/rational.hpp"

namespace mf24 {

/// Default number of known coefficients for expansions produced by the CLI
/// and by the solvers.
inline constexpr int kDefaultPrecision = 60;

/// Truncated power series  c_0 + c_1 q + ... + c_{P-1} q^{P-1} + O(q^P)
/// with exact rational coefficients.
///
/// The precision P is the number of known coefficients. Binary operations
/// return a series whose precision is the smaller operand precision, so a
/// result never claims a coefficient that one of its inputs did not know.
class QSeries {
 public:
  QSeries() = default;

  /// The zero series to precision `prec`.
  explicit QSeries(int prec);

  /// Takes ownership of `coeffs`; precision is coeffs.size().
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries one(int prec);
  static QSeries monomial(int exponent, const Rational& coeff, int prec);
  static QSeries from_integers(std::span<const long> coeffs);

  int prec() const noexcept { return static_cast<int>(coeffs_.size()); }

  /// Coefficient of q^n. Requires 0 <= n < prec().
  const Rational& operator[](int n) const;
  const Rational& coeff(int n) const { return (*this)[n]; }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;

  /// Smallest n with a nonzero coefficient, or prec() if none is known.
  int valuation() const;

  /// Keeps the first `prec` coefficients. Requires prec <= this->prec().
  QSeries truncated(int prec) const;

 private:
  std::vector<Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries scale(const QSeries& a, const Rational& c);

/// Cauchy product truncated to min(a.prec(), b.prec()).
QSeries mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse by the coefficient recurrence. Throws
/// NonUnitSeries when the constant term is zero (or unknown).
QSeries invert(const QSeries& a);

/// Non-negative integer power by repeated squaring.
QSeries pow(const QSeries& a, unsigned exponent);

/// q -> q^m. The precision is kept at a.prec().
QSeries dilate(const QSeries& a, int m);

/// Multiplies by q^shift (shift >= 0); the precision is unchanged, the
/// top `shift` coefficients fall off.
QSeries shift_up(const QSeries& a, int shift);

/// True when every coefficient below min(a.prec(), b.prec()) agrees.
bool equal_up_to_shared_precision(const QSeries& a, const QSeries& b);

/// First index below the shared precision where a and b differ, or -1.
int first_difference(const QSeries& a, const QSeries& b);

/// "c0 + c1*q + c2*q^2 + ... + O(q^P)"; zero terms are omitted.
std::string to_string(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }

/// Exact coefficientwise equality including precision.
bool operator==(const QSeries& a, const QSeries& b);

}  // namespace mf24
