#pragma once

#include <array>
#include <string>
#include <string_view>

#include "mf24/qseries.hpp"
#include "mf24/rational.hpp"

namespace mf24 {

/// Kronecker symbol (t | m), extended to all integers by the usual
/// conventions: (t|0) = [t = ±1], (t|-1) = sign(t), (t|2) from t mod 8 and
/// the Jacobi symbol on the odd part.
int kronecker(long t, long m);

/// The quadratic character m -> (t | m) for one of the eight labels
/// t in {-24, -8, -4, -3, 1, 8, 12, 24}.
class KroneckerChar {
 public:
  static constexpr std::array<int, 8> kAllowed{-24, -8, -4, -3, 1, 8, 12, 24};

  /// Throws std::invalid_argument for t outside kAllowed.
  explicit KroneckerChar(int t);

  int t() const noexcept { return t_; }
  int operator()(long m) const { return kronecker(t_, m); }

  friend bool operator==(KroneckerChar a, KroneckerChar b) { return a.t_ == b.t_; }

 private:
  int t_;
};

/// The four nebentypus characters of the level-24 weight-2 spaces.
enum class CharacterLabel { chi1, chi8, chi12, chi24, other };

inline constexpr std::array<CharacterLabel, 4> kSpaceCharacters{
    CharacterLabel::chi1, CharacterLabel::chi8, CharacterLabel::chi12,
    CharacterLabel::chi24};

/// 1, 8, 12, 24 (0 for `other`).
int modulus_of(CharacterLabel label);
/// "chi1", "chi8", ...
std::string name_of(CharacterLabel label);
/// Accepts "1", "8", "chi12", "χ24". Throws ParseError.
CharacterLabel parse_character(std::string_view text);

/// Sum over divisors m | n of chi(m) psi(n/m) m; zero for n <= 0.
Rational twisted_sigma(KroneckerChar chi, KroneckerChar psi, long n);

/// Same, for a rational argument such as n/d; zero unless the argument is a
/// positive integer.
Rational twisted_sigma(KroneckerChar chi, KroneckerChar psi, const Rational& n);

/// Ordinary divisor sum sigma(n) (zero for n <= 0).
long divisor_sum(long n);

/// E_{t1,t2}(m z): constant term C_{t1,t2} followed by the twisted divisor
/// sums, with q replaced by q^m.
struct EisensteinSpec {
  int t1 = 1;
  int t2 = 1;
  int dilation = 1;

  /// True for the eleven character pairs that define a series here.
  static bool is_listed_pair(int t1, int t2);

  /// C_{t1,t2}. Throws UnknownPair.
  Rational constant() const;

  /// "E_{1,8}(z)", "E_{1,8}(3z)".
  std::string label() const;

  friend bool operator==(const EisensteinSpec&, const EisensteinSpec&) = default;
};

/// Throws UnknownPair for unlisted pairs.
QSeries eisenstein_series(const EisensteinSpec& spec, int prec);

/// L(q) = E_{1,1}(z) = -1/24 + sum sigma(n) q^n.
QSeries L_series(int prec);

/// L_d(q) = L(q) - d L(q^d) for 1 < d | 24.
struct LdSpec {
  int d = 2;

  static constexpr std::array<int, 7> kAllowed{2, 3, 4, 6, 8, 12, 24};

  /// "L_4".
  std::string label() const { return "L_" + std::to_string(d); }
};

/// Throws BadDivisor unless d is a divisor of 24 greater than 1.
QSeries Ld_series(const LdSpec& spec, int prec);

}  // namespace mf24
