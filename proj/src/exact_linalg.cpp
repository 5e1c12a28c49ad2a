#include "hilb/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hilb {

namespace {

using IntegerRows = std::vector<std::vector<BigInt>>;

// Scales each row by the lcm of its denominators. `scale` accumulates the
// product of the multipliers so determinants can be corrected afterwards.
IntegerRows clear_denominators(const RationalMatrix& a, BigInt& scale) {
  IntegerRows rows(a.rows(), std::vector<BigInt>(a.cols()));
  scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      rows[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    }
    scale *= l;
  }
  return rows;
}

struct BareissOutcome {
  std::size_t rank = 0;
  int sign = 1;
  BigInt last_pivot = 1;
};

// In-place Bareiss elimination over the first `pivot_cols` columns. After the
// call rows [0, rank) are in echelon form and the remaining rows are zero in
// those columns.
BareissOutcome bareiss(IntegerRows& m, std::size_t pivot_cols) {
  BareissOutcome out;
  BigInt previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      out.sign = -out.sign;
    }
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < m[r].size(); ++c) {
        m[r][c] = m[row][col] * m[r][c] - m[r][col] * m[row][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      m[r][col] = 0;
    }
    previous = m[row][col];
    ++row;
  }
  out.rank = row;
  out.last_pivot = previous;
  return out;
}

}  // namespace

ExactRational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  BigInt scale;
  IntegerRows m = clear_denominators(a, scale);
  const BareissOutcome out = bareiss(m, a.cols());
  if (out.rank < a.rows()) return 0;
  ExactRational det(out.sign * out.last_pivot, scale);
  det.canonicalize();
  return det;
}

std::size_t rank(const RationalMatrix& a) {
  BigInt scale;
  IntegerRows m = clear_denominators(a, scale);
  return bareiss(m, a.cols()).rank;
}

std::vector<ExactRational> solve(const RationalMatrix& a, const std::vector<ExactRational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");

  RationalMatrix augmented(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = a(r, c);
    augmented(r, n) = b[r];
  }
  BigInt scale;
  IntegerRows m = clear_denominators(augmented, scale);
  const BareissOutcome out = bareiss(m, n);
  if (out.rank < n) throw std::domain_error("solve: singular matrix");

  // Bareiss leaves an upper-triangular integer system; back-substitute.
  std::vector<ExactRational> x(n);
  for (std::size_t r = n; r-- > 0;) {
    ExactRational acc(m[r][n]);
    for (std::size_t c = r + 1; c < n; ++c) acc -= ExactRational(m[r][c]) * x[c];
    x[r] = acc / ExactRational(m[r][r]);
  }
  return x;
}

}  // namespace hilb
