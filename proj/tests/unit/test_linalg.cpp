#include <gtest/gtest.h>

#include "mf24/linalg.hpp"

using namespace mf24;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  RationalMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

}  // namespace

TEST(Linalg, SolvesExactly) {
  const RationalMatrix m = from_rows({{2, 1}, {1, 3}});
  const LinearSolution s = solve_linear(m, {Rational(1), Rational(2)});
  ASSERT_EQ(s.status, LinearSolution::Status::unique);
  EXPECT_EQ(s.x[0], make_rational(1, 5));
  EXPECT_EQ(s.x[1], make_rational(3, 5));
}

TEST(Linalg, OverdeterminedConsistentAndInconsistent) {
  const RationalMatrix m = from_rows({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(solve_linear(m, {Rational(1), Rational(2), Rational(3)}).status,
            LinearSolution::Status::unique);
  EXPECT_EQ(solve_linear(m, {Rational(1), Rational(2), Rational(4)}).status,
            LinearSolution::Status::inconsistent);
}

TEST(Linalg, Underdetermined) {
  const RationalMatrix m = from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(solve_linear(m, {Rational(1), Rational(2)}).status,
            LinearSolution::Status::underdetermined);
  EXPECT_EQ(rank(m), 1u);
  EXPECT_FALSE(inverse(m).has_value());
}

TEST(Linalg, InverseRoundTrip) {
  const RationalMatrix m = from_rows({{1, 2, 0}, {0, 1, 4}, {5, 6, 0}});
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < 3; ++k) {
        s += m(i, k) * (*inv)(k, j);
      }
      EXPECT_EQ(s, Rational(i == j ? 1 : 0));
    }
  }
}
