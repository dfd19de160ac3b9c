#include <gtest/gtest.h>

#include "mf24/errors.hpp"
#include "mf24/etafunc.hpp"
#include "mf24/theta.hpp"

using namespace mf24;

namespace {

// Coefficients of prod (1 - q^n) from the generalized pentagonal numbers
// k(3k-1)/2, k = 1, -1, 2, -2, ..., with sign (-1)^k.
std::vector<long> euler_coefficients(int prec) {
  std::vector<long> c(prec, 0);
  c[0] = 1;
  for (long k = 1;; ++k) {
    const long a = k * (3 * k - 1) / 2;
    const long b = k * (3 * k + 1) / 2;
    if (a >= prec) break;
    const long sign = (k % 2 == 0) ? 1 : -1;
    c[a] += sign;
    if (b < prec) c[b] += sign;
  }
  return c;
}

}  // namespace

TEST(EtaSeries, ProductMatchesPentagonalOracle) {
  const std::vector<long> expected = euler_coefficients(120);
  const QSeries product = eta_series(1, 120);
  const QSeries pentagonal = eta_series_pentagonal(1, 120);
  for (int n = 0; n < 120; ++n) {
    ASSERT_EQ(product[n], Rational(expected[n])) << "n=" << n;
    ASSERT_EQ(pentagonal[n], Rational(expected[n])) << "n=" << n;
  }
  EXPECT_EQ(eta_series(3, 40), dilate(eta_series(1, 40), 3));
  EXPECT_EQ(eta_series_pentagonal(8, 90), eta_series(8, 90));
}

TEST(EtaQuotient, CuspFormA) {
  // eta(2z) eta(4z) eta(6z) eta(12z), the weight-2 newform of level 24.
  const std::vector<long> a{0, 1, 0, -1, 0, -2, 0, 0, 0, 1, 0, 4, 0, -2, 0, 2, 0, 2, 0, -4};
  EXPECT_EQ(eta_quotient_series(eta_A(), 20), QSeries::from_integers(a));
}

TEST(EtaQuotient, PhiIdentity) {
  EXPECT_EQ(eta_quotient_series(eta_phi_identity(), 200), phi_series(1, 200));
}

TEST(EtaQuotient, ParseAndPrint) {
  const EtaQuotient f = parse_eta_quotient("2:1,4:1,6:1,12:1");
  EXPECT_EQ(f, eta_A());
  EXPECT_EQ(to_string(f), "2:1,4:1,6:1,12:1");
  EXPECT_EQ(f.weight(), Rational(2));
  EXPECT_EQ(f.leading_exponent(), Rational(1));
  EXPECT_EQ(parse_eta_quotient("1:0,2:3").exponents().size(), 1u);
  try {
    parse_eta_quotient("2:1,4:x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_eta_quotient("5:1"), ParseError);
  EXPECT_THROW(EtaQuotient(std::map<int, int>{{7, 2}}), InvalidEtaQuotient);
}

TEST(EtaQuotient, ExpansionErrors) {
  EXPECT_THROW(eta_quotient_series(EtaQuotient(std::map<int, int>{{1, 1}}), 5), FractionalExponent);
  EXPECT_THROW(eta_quotient_series(EtaQuotient(std::map<int, int>{{1, -24}}), 5), NegativeValuation);
}

TEST(CuspOrders, EtaToTheFourth) {
  const CuspOrderReport r = cusp_orders(EtaQuotient(std::map<int, int>{{1, 4}}));
  const std::vector<std::pair<int, Rational>> expected{
      {1, Rational(4)},           {2, Rational(1)},           {3, make_rational(4, 3)},
      {4, make_rational(1, 2)},   {6, make_rational(1, 3)},   {8, make_rational(1, 2)},
      {12, make_rational(1, 6)},  {24, make_rational(1, 6)}};
  ASSERT_EQ(r.cusps.size(), expected.size());
  for (const auto& [c, ord] : expected) {
    EXPECT_EQ(r.at(c).order, ord) << "c=" << c;
  }
  EXPECT_EQ(r.total_order(), Rational(8));
  EXPECT_EQ(r.at(2).width, 6);
  EXPECT_EQ(r.at(24).width, 1);
  EXPECT_EQ(r.at(1).width, 24);
}

TEST(CuspOrders, CuspFormsVanishEverywhere) {
  for (const EtaQuotient& f : {eta_A(), eta_B1(), eta_B2(), eta_C1(), eta_C2()}) {
    const CuspOrderReport r = cusp_orders(f);
    for (const CuspOrder& c : r.cusps) {
      EXPECT_GT(c.order, 0) << to_string(f) << " at 1/" << c.denominator;
    }
    EXPECT_EQ(r.total_order(), Rational(8)) << to_string(f);
    EXPECT_TRUE(is_holomorphic_modular_form(f));
    EXPECT_TRUE(satisfies_eta_congruences(f));
  }
  for (const CuspOrder& c : cusp_orders(eta_A()).cusps) {
    EXPECT_EQ(c.order, Rational(1));
  }
  EXPECT_EQ(gamma0_index(24), 48);
  EXPECT_THROW(is_holomorphic_modular_form(EtaQuotient(std::map<int, int>{{2, 1}})), NonIntegralWeight);
}

TEST(Character, CuspFormLabels) {
  EXPECT_EQ(character_discriminant(eta_A()), 1);
  EXPECT_EQ(character_discriminant(eta_B1()), 8);
  EXPECT_EQ(character_label(eta_A()), CharacterLabel::chi1);
  EXPECT_EQ(character_label(eta_B1()), CharacterLabel::chi8);
  EXPECT_EQ(character_label(eta_B2()), CharacterLabel::chi8);
  EXPECT_EQ(character_label(eta_C1()), CharacterLabel::chi24);
  EXPECT_EQ(character_label(eta_C2()), CharacterLabel::chi24);
}
