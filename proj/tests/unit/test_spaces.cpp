#include <gtest/gtest.h>

#include "mf24/errors.hpp"
#include "mf24/spaces.hpp"
#include "mf24/theta.hpp"
#include "series_gen.hpp"

using namespace mf24;

TEST(Spaces, DimensionsAndBases) {
  const std::pair<CharacterLabel, std::pair<int, int>> dims[] = {
      {CharacterLabel::chi1, {7, 1}},
      {CharacterLabel::chi8, {4, 2}},
      {CharacterLabel::chi12, {8, 0}},
      {CharacterLabel::chi24, {4, 2}}};
  for (auto [c, d] : dims) {
    const SpaceId e{c, Subspace::E}, s{c, Subspace::S}, m{c, Subspace::M};
    EXPECT_EQ(e.dimension(), d.first);
    EXPECT_EQ(s.dimension(), d.second);
    EXPECT_EQ(basis_for(m, 9).size(), static_cast<std::size_t>(d.first + d.second));
    EXPECT_EQ(basis_for(e, 9).size(), static_cast<std::size_t>(d.first));
    EXPECT_EQ(basis_for(s, 9).size(), static_cast<std::size_t>(d.second));
    EXPECT_EQ(sturm_bound(m), 8);
  }
}

TEST(Spaces, BasesHaveFullRankAtTheSturmBound) {
  for (CharacterLabel c : kSpaceCharacters) {
    const SpaceId m{c, Subspace::M};
    EXPECT_EQ(basis_rank(m, 8), static_cast<std::size_t>(m.dimension())) << m.name();
  }
}

TEST(Spaces, NamesRoundTrip) {
  EXPECT_EQ(parse_space("E:chi8"), (SpaceId{CharacterLabel::chi8, Subspace::E}));
  EXPECT_EQ(parse_space("24"), (SpaceId{CharacterLabel::chi24, Subspace::M}));
  EXPECT_EQ((SpaceId{CharacterLabel::chi12, Subspace::S}).name(), "S:chi12");
  EXPECT_THROW(parse_space("X:chi8"), ParseError);
}

TEST(Spaces, BasisLabels) {
  const Basis b = basis_for({CharacterLabel::chi8, Subspace::M}, 9);
  EXPECT_EQ(b.labels(), (std::vector<std::string>{"E_{1,8}(z)", "E_{1,8}(3z)", "E_{8,1}(z)",
                                                   "E_{8,1}(3z)", "B_1", "B_2"}));
  EXPECT_EQ(b.index_of("B_2"), 5);
  EXPECT_EQ(b.index_of("A"), -1);
  EXPECT_THROW(basis_for({CharacterLabel::chi8, Subspace::M}, 8), PrecisionError);
}

TEST(Solve, JacobiRow) {
  const SolveResult r = solve_in_basis(theta_product_series(ThetaProductSpec({1, 1, 1, 1}), 61),
                                       {CharacterLabel::chi1, Subspace::M});
  EXPECT_EQ(r.verified_to, 60);
  for (const auto& [label, value] : r.coefficients) {
    EXPECT_EQ(value, Rational(label == "L_4" ? 8 : 0)) << label;
  }
  EXPECT_EQ(to_json(r),
            R"({"space":"chi1","coefficients":{"L_2":"0","L_3":"0","L_4":"8","L_6":"0",)"
            R"("L_8":"0","L_12":"0","L_24":"0","A":"0"},"verified_to":60})");
}

TEST(Solve, Errors) {
  const QSeries chi8_form = theta_product_series(ThetaProductSpec({1, 1, 1, 2}), 61);
  EXPECT_THROW(solve_in_basis(chi8_form, {CharacterLabel::chi1, Subspace::M}), NotInSpace);
  EXPECT_THROW(solve_in_basis(chi8_form, {CharacterLabel::chi8, Subspace::S}), NotInSpace);
  EXPECT_THROW(solve_in_basis(chi8_form, {CharacterLabel::chi8, Subspace::M}, 7),
               PrecisionError);
  EXPECT_THROW(solve_in_basis(chi8_form.truncated(30), {CharacterLabel::chi8, Subspace::M}),
               PrecisionError);
  EXPECT_NO_THROW(solve_in_basis(chi8_form, {CharacterLabel::chi8, Subspace::M}));
}

TEST(Solve, EisensteinCuspSplit) {
  const QSeries a = eta_quotient_series(eta_A(), 61);
  const EisensteinCuspSplit split = eisenstein_cusp_split(a, {CharacterLabel::chi1, Subspace::M});
  EXPECT_FALSE(split.is_eisenstein());
  ASSERT_EQ(split.cusp.size(), 1u);
  EXPECT_EQ(split.cusp[0].second, Rational(1));
  for (const auto& e : split.eisenstein) {
    EXPECT_EQ(e.second, Rational(0));
  }
}

// 100 seeded random combinations per the basis are recovered exactly.
TEST(SolveProperties, RoundTrip) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const CharacterLabel c = kSpaceCharacters[trial % 4];
    const SpaceId space{c, Subspace::M};
    const Basis basis = basis_for(space, 61);
    std::vector<Rational> x(basis.size());
    for (auto& v : x) {
      v = mf24::testing::random_rational(rng);
    }
    const SolveResult r = solve_in_basis(linear_combination(basis, x), space);
    ASSERT_EQ(r.values(), x) << "trial " << trial;
  }
}
