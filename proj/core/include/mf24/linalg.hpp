#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mf24/rational.hpp"

namespace mf24 {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

struct LinearSolution {
  enum class Status { unique, inconsistent, underdetermined };
  Status status;
  std::vector<Rational> x;  // filled only when status == unique
};

/// Solves m * x = rhs exactly by Gauss-Jordan elimination.
LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace mf24
