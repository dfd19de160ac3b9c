#include <gtest/gtest.h>

#include <algorithm>

#include "mf24/errors.hpp"
#include "mf24/repnum.hpp"

using namespace mf24;

TEST(BruteForce, SumOfFourSquares) {
  const ThetaProductSpec four({1, 1, 1, 1});
  const std::uint64_t r4[] = {1, 8, 24, 32, 24, 48, 96, 64, 24, 104, 144};
  for (long n = 0; n <= 10; ++n) {
    EXPECT_EQ(brute_force_count(four, n), r4[n]) << "n=" << n;
  }
  EXPECT_EQ(brute_force_count(ThetaProductSpec({1, 2, 3, 6}), 0), 1u);
  EXPECT_EQ(brute_force_count(ThetaProductSpec({2, 2, 3, 3}), 1), 0u);
  EXPECT_EQ(brute_force_count(four, -1), 0u);
}

TEST(BruteForce, TableAgreesWithPointwiseCount) {
  for (const ThetaProductSpec& s : {ThetaProductSpec({1, 2, 3, 6}), ThetaProductSpec({2, 3, 6, 6}),
                                    ThetaProductSpec({1, 1, 1, 5})}) {
    const auto counts = brute_force_counts(s, 300);
    for (long n = 0; n <= 300; ++n) {
      ASSERT_EQ(counts[n], brute_force_count(s, n)) << to_string(s) << " n=" << n;
    }
  }
}

TEST(Formulas, NormalizedForms) {
  const auto forms = normalized_forms();
  EXPECT_EQ(forms.size(), 26u);
  EXPECT_EQ(printed_formulas().size(), 26u);
  for (const RepFormula& f : printed_formulas()) {
    EXPECT_NE(std::find(forms.begin(), forms.end(), f.form), forms.end()) << to_string(f.form);
  }
}

TEST(Formulas, Rendering) {
  EXPECT_EQ(to_string(printed_formulas()[0]), "8*sigma(n) - 32*sigma(n/4)");
  EXPECT_EQ(to_string(printed_formulas()[5]),
            "16/5*sigma[1,8](n) - 24/5*sigma[1,8](n/3) - 4/5*sigma[8,1](n) - 6/5*sigma[8,1](n/3)"
            " + 8/5*b1(n)");
}

TEST(Formulas, ClassicalJacobiThrough1000) {
  const ThetaProductSpec four({1, 1, 1, 1});
  const auto counts = brute_force_counts(four, 1000);
  for (long n = 1; n <= 1000; ++n) {
    const long expected = 8 * divisor_sum(n) - (n % 4 == 0 ? 32 * divisor_sum(n / 4) : 0);
    ASSERT_EQ(counts[n], static_cast<std::uint64_t>(expected)) << "n=" << n;
    ASSERT_EQ(formula_count(four, n), Rational(expected)) << "n=" << n;
  }
}

// The only printed formula that disagrees with the basis solve.
TEST(Formulas, PrintedDiscrepancyIsTwoTwoThreeThree) {
  const auto d = printed_formula_discrepancies();
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].printed.form, ThetaProductSpec({2, 2, 3, 3}));
  EXPECT_NE(d[0].printed.evaluate(1), Rational(0));
  EXPECT_EQ(brute_force_count(ThetaProductSpec({2, 2, 3, 3}), 1), 0u);
  EXPECT_EQ(corrected_forms(), std::vector<ThetaProductSpec>{ThetaProductSpec({2, 2, 3, 3})});
}

TEST(Formulas, CorrectedEqualsGenerated) {
  const auto generated = formula_table();
  const auto corrected = corrected_formulas();
  ASSERT_EQ(generated.size(), corrected.size());
  for (const RepFormula& c : corrected) {
    const auto it = std::find_if(generated.begin(), generated.end(),
                                 [&](const RepFormula& g) { return g.form == c.form; });
    ASSERT_NE(it, generated.end());
    EXPECT_EQ(*it, c) << to_string(c.form) << "\n  " << to_string(*it) << "\n  " << to_string(c);
  }
}

TEST(Formulas, AllNormalizedFormsMatchBruteForceThrough500) {
  for (const ThetaProductSpec& s : normalized_forms()) {
    const auto counts = brute_force_counts(s, 500);
    for (long n = 1; n <= 500; ++n) {
      ASSERT_EQ(formula_count(s, n), Rational(counts[n])) << to_string(s) << " n=" << n;
    }
  }
}

TEST(Formulas, NonNormalizedTableForms) {
  const ThetaProductSpec s({2, 2, 6, 6});
  const auto counts = brute_force_counts(s, 200);
  for (long n = 1; n <= 200; ++n) {
    ASSERT_EQ(formula_count(s, n), Rational(counts[n])) << "n=" << n;
  }
  EXPECT_THROW(formula_count(ThetaProductSpec({5, 5, 5, 5}), 3), UnknownForm);
  EXPECT_THROW(generated_formula(ThetaProductSpec({1, 1, 1, 5})), UnknownForm);
}

TEST(CuspCoefficients, SharedTable) {
  const auto table = cusp_coefficients(50);
  EXPECT_GE(table->n_max(), 50);
  EXPECT_EQ(table->value(CuspSequence::a, 5), Rational(-2));
  EXPECT_EQ(table->value(CuspSequence::a, 11), Rational(4));
  EXPECT_THROW(table->value(CuspSequence::b1, -1), PrecisionError);
}
