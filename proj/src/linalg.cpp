#include "padic/linalg.hpp"

#include <utility>

namespace padic {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Each row multiplied by the lcm of its denominators. Row scaling preserves
// rank, pivots and solution sets; det picks up the product of the scales.
IntMatrix integer_rows(const RationalMatrix& m, Integer* scale_product = nullptr) {
  IntMatrix out(m.rows(), std::vector<Integer>(m.cols()));
  if (scale_product) *scale_product = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).den().get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[r][c] = m(r, c).num() * (l / m(r, c).den());
    }
    if (scale_product) *scale_product *= l;
  }
  return out;
}

// In-place Bareiss elimination restricted to the first `pivot_cols` columns,
// skipping columns without a pivot. Returns the pivot columns; rows are
// permuted so pivots sit on the leading diagonal positions. `swaps` counts
// row exchanges.
std::vector<std::size_t> bareiss(IntMatrix& a, std::size_t pivot_cols, int& swaps) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  swaps = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      ++swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ArithmeticError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ArithmeticError("matrix shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw ArithmeticError("matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!v[c].is_zero()) acc += m(r, c).get() * v[c].get();
    }
    out[r] = Rational(std::move(acc));
  }
  return out;
}

std::vector<Rational> multiply(const std::vector<Rational>& v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw ArithmeticError("vector-matrix shape mismatch");
  std::vector<mpq_class> acc(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) acc[c] += v[r].get() * m(r, c).get();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(std::move(x));
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of a non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Integer scale;
  IntMatrix a = integer_rows(m, &scale);
  int swaps = 0;
  auto pivots = bareiss(a, m.cols(), swaps);
  if (pivots.size() < m.rows()) return Rational();
  Rational det(a[m.rows() - 1][m.cols() - 1], scale);
  return swaps % 2 ? -det : det;
}

std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  IntMatrix a = integer_rows(m);
  int swaps = 0;
  return bareiss(a, m.cols(), swaps);
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw ArithmeticError("solve shape mismatch");
  RationalMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  IntMatrix m = integer_rows(aug);
  int swaps = 0;
  auto pivots = bareiss(m, n, swaps);
  if (pivots.size() < n) throw SingularMatrixError("singular matrix in solve");
  RationalMatrix x(n, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t k = n; k-- > 0;) {
      mpq_class acc(m[k][n + col]);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j] != 0) acc -= mpq_class(m[k][j]) * x(j, col).get();
      }
      acc /= mpq_class(m[k][k]);
      x(k, col) = Rational(std::move(acc));
    }
  }
  return x;
}

std::vector<Rational> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve(a, rhs).column(0);
}

RationalMatrix inverse(const RationalMatrix& a) {
  return solve(a, RationalMatrix::identity(a.rows()));
}

}  // namespace padic
