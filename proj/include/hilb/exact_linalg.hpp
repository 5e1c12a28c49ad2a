#pragma once

#include <cstddef>
#include <vector>

#include "hilb/exact_rational.hpp"

namespace hilb {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ExactRational(0)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ExactRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactRational> data_;
};

// All three routines clear denominators row by row and then run Bareiss
// fraction-free elimination over the integers.
ExactRational determinant(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);

// Unique solution of a x = b for square nonsingular a; throws
// std::domain_error if a is singular.
std::vector<ExactRational> solve(const RationalMatrix& a, const std::vector<ExactRational>& b);

}  // namespace hilb
