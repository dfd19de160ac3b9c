#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "mf24/arith.hpp"
#include "mf24/errors.hpp"

using namespace mf24;

namespace {

// Residues mod |t| on which chi_t is +1; it is -1 on the other units
// and 0 off the units. Written out by hand from the definitions.
int chi_by_residue(int t, long m) {
  if (t == 1) {
    return 1;
  }
  const long conductor = std::abs(t);
  if (std::gcd(m, conductor) != 1) {
    return 0;
  }
  std::vector<long> plus;
  switch (t) {
    case -4: plus = {1}; break;
    case -3: plus = {1}; break;
    case 8: plus = {1, 7}; break;
    case -8: plus = {1, 3}; break;
    case 12: plus = {1, 11}; break;
    case 24: plus = {1, 5, 19, 23}; break;
    case -24: plus = {1, 5, 7, 11}; break;
    default: return 99;
  }
  const long r = m % conductor;
  return std::find(plus.begin(), plus.end(), r) != plus.end() ? 1 : -1;
}

}  // namespace

TEST(Kronecker, MatchesResidueTables) {
  for (int t : KroneckerChar::kAllowed) {
    for (long m = 1; m <= 200; ++m) {
      ASSERT_EQ(kronecker(t, m), chi_by_residue(t, m)) << "t=" << t << " m=" << m;
    }
  }
}

TEST(Kronecker, Conventions) {
  EXPECT_EQ(kronecker(1, 0), 1);
  EXPECT_EQ(kronecker(8, 0), 0);
  EXPECT_EQ(kronecker(-3, -1), -1);
  EXPECT_EQ(kronecker(12, -1), 1);
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(17, 2), 1);
  EXPECT_EQ(kronecker(2, 15), 1);
  EXPECT_EQ(kronecker(3, 7), -1);
}

TEST(KroneckerProperties, MultiplicativeAndPeriodic) {
  for (int t : KroneckerChar::kAllowed) {
    const KroneckerChar chi(t);
    const long period = std::abs(t);
    for (long m = 1; m <= 200; ++m) {
      ASSERT_EQ(chi(m + period), chi(m)) << "t=" << t << " m=" << m;
      for (long n = 1; n <= 200; ++n) {
        ASSERT_EQ(chi(m * n), chi(m) * chi(n)) << "t=" << t << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(KroneckerChar, RejectsUnlistedLabels) {
  EXPECT_THROW(KroneckerChar(5), std::invalid_argument);
  EXPECT_THROW(KroneckerChar(-1), std::invalid_argument);
}

TEST(Characters, ParseAndName) {
  EXPECT_EQ(parse_character("8"), CharacterLabel::chi8);
  EXPECT_EQ(parse_character("chi12"), CharacterLabel::chi12);
  EXPECT_EQ(parse_character("χ24"), CharacterLabel::chi24);
  EXPECT_EQ(name_of(CharacterLabel::chi1), "chi1");
  EXPECT_THROW(parse_character("chi5"), ParseError);
}

TEST(TwistedSigma, SmallValues) {
  const KroneckerChar one(1), chi8(8);
  EXPECT_EQ(divisor_sum(12), 28);
  EXPECT_EQ(twisted_sigma(one, one, 12), Rational(28));
  EXPECT_EQ(twisted_sigma(one, chi8, 3), Rational(2));   // chi8(3) + 3
  EXPECT_EQ(twisted_sigma(chi8, one, 3), Rational(-2));  // 1 - 3
  EXPECT_EQ(twisted_sigma(one, chi8, 2), Rational(2));
  EXPECT_EQ(twisted_sigma(one, one, make_rational(7, 2)), Rational(0));
  EXPECT_EQ(twisted_sigma(one, one, make_rational(8, 2)), Rational(7));
  EXPECT_EQ(twisted_sigma(one, one, 0L), Rational(0));
}

TEST(TwistedSigmaProperties, MultiplicativeOnCoprimePairs) {
  constexpr std::pair<int, int> kPairs[] = {{1, 1},  {1, 8},   {8, 1},   {1, 12},
                                            {12, 1}, {-3, -4}, {-4, -3}, {1, 24},
                                            {24, 1}, {-3, -8}, {-8, -3}};
  for (auto [t1, t2] : kPairs) {
    const KroneckerChar chi(t1), psi(t2);
    for (long m = 1; m <= 50; ++m) {
      for (long n = 1; n <= 50; ++n) {
        if (std::gcd(m, n) != 1) continue;
        ASSERT_EQ(twisted_sigma(chi, psi, m * n),
                  twisted_sigma(chi, psi, m) * twisted_sigma(chi, psi, n))
            << t1 << "," << t2 << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(Eisenstein, LeadingCoefficients) {
  EXPECT_EQ(to_string(L_series(5)), "-1/24 + q + 3*q^2 + 4*q^3 + 7*q^4 + O(q^5)");
  EXPECT_EQ(to_string(eisenstein_series({8, 1, 1}, 4)), "-1/2 + q + q^2 - 2*q^3 + O(q^4)");
  EXPECT_EQ(to_string(eisenstein_series({1, 8, 3}, 7)), "q^3 + 2*q^6 + O(q^7)");
  EXPECT_EQ(eisenstein_series({24, 1, 1}, 2)[0], Rational(-3));
  EXPECT_EQ(eisenstein_series({12, 1, 1}, 2)[0], Rational(-1));
  EXPECT_EQ(eisenstein_series({-3, -8, 1}, 2)[0], Rational(0));
  EXPECT_EQ(EisensteinSpec({1, 8, 3}).label(), "E_{1,8}(3z)");
  EXPECT_THROW(eisenstein_series({1, 3, 1}, 4), UnknownPair);
}

TEST(Eisenstein, LdSeries) {
  const QSeries l2 = Ld_series({2}, 5);
  EXPECT_EQ(to_string(l2), "1/24 + q + q^2 + 4*q^3 + q^4 + O(q^5)");
  EXPECT_EQ(Ld_series({24}, 2)[0], Rational(23, 24));
  EXPECT_THROW(Ld_series({5}, 4), BadDivisor);
  EXPECT_THROW(Ld_series({1}, 4), BadDivisor);
}
