#include "mf24/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace mf24 {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(a, c), (*this)(b, c));
  }
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    m.swap_rows(row, pivot);
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) {
        continue;
      }
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows()) {
    throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  const std::size_t n = m.cols();
  RationalMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = m(r, c);
    }
    aug(r, n) = rhs[r];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) {
    return {LinearSolution::Status::inconsistent, {}};
  }
  if (pivots.size() < n) {
    return {LinearSolution::Status::underdetermined, {}};
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[pivots[r]] = aug(r, n);
  }
  return {LinearSolution::Status::unique, std::move(x)};
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("inverse: matrix is not square");
  }
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      aug(r, c) = m(r, c);
    }
    aug(r, n + r) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = aug(r, n + c);
    }
  }
  return out;
}

}  // namespace mf24
