#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mf24/arith.hpp"
#include "mf24/qseries.hpp"

namespace mf24 {

/// Coefficients (a1, a2, a3, a4) of the diagonal form a1 x1^2 + ... + a4 x4^2.
/// Stored sorted, since the theta product does not depend on the order.
class ThetaProductSpec {
 public:
  /// Throws std::invalid_argument unless every entry is positive.
  explicit ThetaProductSpec(std::array<int, 4> a);

  const std::array<int, 4>& coefficients() const noexcept { return a_; }
  int operator[](std::size_t i) const { return a_[i]; }

  /// gcd(a1, ..., a4) = 1.
  bool is_primitive() const;

  friend bool operator==(const ThetaProductSpec&, const ThetaProductSpec&) = default;
  friend auto operator<=>(const ThetaProductSpec&, const ThetaProductSpec&) = default;

 private:
  std::array<int, 4> a_;
};

/// "1,2,3,6". Throws ParseError.
ThetaProductSpec parse_theta_spec(std::string_view text);
std::string to_string(const ThetaProductSpec& s);

/// phi(a z) = 1 + 2 sum_{n >= 1} q^{a n^2}, written directly from the squares.
QSeries phi_series(int a, int prec);

/// phi(a1 z) phi(a2 z) phi(a3 z) phi(a4 z); the coefficient of q^n is the
/// number of integer solutions of a1 x1^2 + ... + a4 x4^2 = n.
QSeries theta_product_series(const ThetaProductSpec& s, int prec);

/// The theta products with entries in {1, 2, 3, 6} lying in
/// M_2(Gamma0(24), chi), for one of the four space characters.
std::vector<ThetaProductSpec> theta_products_in(CharacterLabel character);

/// All 35 such products, grouped chi1, chi8, chi12, chi24.
std::vector<ThetaProductSpec> all_level24_theta_products();

/// Character of the space containing the theta product; `other` when the
/// quadruple is not one of the 35.
CharacterLabel theta_product_character(const ThetaProductSpec& s);

}  // namespace mf24
