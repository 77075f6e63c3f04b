#ifndef PADIC_LINALG_HPP_
#define PADIC_LINALG_HPP_

#include <cstddef>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

class SingularMatrixError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// M * v.
std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v);
/// v^T * M.
std::vector<Rational> multiply(const std::vector<Rational>& v, const RationalMatrix& m);

// The routines below scale every row to integers and run Bareiss fraction-free
// elimination over Z, so intermediate entries stay exact and bounded by minors.

Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Column indices of the pivots of a row echelon form, in increasing order.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);
/// Solves A X = B for square nonsingular A. Throws SingularMatrixError.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b);
RationalMatrix inverse(const RationalMatrix& a);

}  // namespace padic

#endif  // PADIC_LINALG_HPP_
