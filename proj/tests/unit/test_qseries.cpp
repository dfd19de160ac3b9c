#include <gtest/gtest.h>

#include "mf24/errors.hpp"
#include "mf24/qseries.hpp"
#include "series_gen.hpp"

using namespace mf24;

namespace {

QSeries ints(std::initializer_list<long> c) {
  std::vector<long> v(c);
  return QSeries::from_integers(v);
}

}  // namespace

TEST(QSeriesText, RendersRationalsAndBigO) {
  QSeries s({Rational(1), Rational(-1), make_rational(8, 3), Rational(0), Rational(0)});
  EXPECT_EQ(to_string(s), "1 - q + 8/3*q^2 + O(q^5)");
  EXPECT_EQ(to_string(QSeries(1)), "O(q)");
  EXPECT_EQ(to_string(QSeries(0)), "O(1)");
  EXPECT_EQ(to_string(ints({0, 0, -2})), "-2*q^2 + O(q^3)");
}

TEST(QSeriesPrecision, BinaryOpsKeepTheSmallerPrecision) {
  const QSeries a = ints({1, 1, 1, 1, 1, 1});
  const QSeries b = ints({1, 2, 3});
  EXPECT_EQ((a + b).prec(), 3);
  EXPECT_EQ((a * b).prec(), 3);
  EXPECT_EQ((a - b).prec(), 3);
  EXPECT_THROW(b[3], PrecisionError);
  EXPECT_THROW(b[-1], PrecisionError);
}

TEST(QSeriesArithmetic, GeometricSeriesInverse) {
  const QSeries one_minus_q = ints({1, -1, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(invert(one_minus_q), ints({1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(invert(ints({0, 1, 0})), NonUnitSeries);
}

TEST(QSeriesArithmetic, BinomialPower) {
  EXPECT_EQ(pow(ints({1, 1, 0, 0, 0, 0, 0}), 5), ints({1, 5, 10, 10, 5, 1, 0}));
  EXPECT_EQ(pow(ints({1, 1, 0}), 0), QSeries::one(3));
}

TEST(QSeriesArithmetic, DilateAndShift) {
  EXPECT_EQ(dilate(ints({1, 1, 2, 0, 0, 0, 0}), 3), ints({1, 0, 0, 1, 0, 0, 2}));
  EXPECT_EQ(shift_up(ints({1, 2, 3, 4}), 2), ints({0, 0, 1, 2}));
  EXPECT_EQ(ints({0, 0, 5, 1}).valuation(), 2);
  EXPECT_EQ(QSeries(4).valuation(), 4);
}

TEST(QSeriesArithmetic, EqualityIncludesPrecision) {
  EXPECT_FALSE(ints({1, 2}) == ints({1, 2, 0}));
  EXPECT_TRUE(equal_up_to_shared_precision(ints({1, 2}), ints({1, 2, 7})));
  EXPECT_EQ(first_difference(ints({1, 2, 3}), ints({1, 2, 4})), 2);
  EXPECT_EQ(first_difference(ints({1, 2, 3}), ints({1, 2})), -1);
}

// Ring axioms on 1000 seeded random cases.
TEST(QSeriesProperties, RingAxioms) {
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> prec_dist(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = prec_dist(rng);
    const QSeries a = mf24::testing::random_series(rng, p);
    const QSeries b = mf24::testing::random_series(rng, p);
    const QSeries c = mf24::testing::random_series(rng, p);
    const QSeries zero(p);
    const QSeries one = QSeries::one(p);
    SCOPED_TRACE("trial " + std::to_string(trial));

    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a + (-a), zero);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * one, a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (a[0] != 0) {
      ASSERT_EQ(a * invert(a), one);
    }
  }
}
