#include "padic/tensor_algebra.hpp"

namespace padic {

TensorAlgebra::TensorAlgebra(RationalPoly theta_poly, RationalPoly pi_poly)
    : theta_poly_(std::move(theta_poly)), pi_poly_(std::move(pi_poly)) {
  if (!theta_poly_.is_monic() || theta_poly_.degree() < 1 || !pi_poly_.is_monic() ||
      pi_poly_.degree() < 1) {
    throw ArithmeticError("tensor algebra needs monic polynomials of degree >= 1");
  }
}

TensorAlgebra::Element TensorAlgebra::basis(int i, int j) const {
  Element out = zero();
  out[index(i, j)] = Rational(1);
  return out;
}

TensorAlgebra::Element TensorAlgebra::theta() const {
  if (f() > 1) return basis(1, 0);
  Element out = zero();
  out[0] = -theta_poly_.coeff(0);
  return out;
}

TensorAlgebra::Element TensorAlgebra::pi() const {
  if (e() > 1) return basis(0, 1);
  Element out = zero();
  out[0] = -pi_poly_.coeff(0);
  return out;
}

TensorAlgebra::Element TensorAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

TensorAlgebra::Element TensorAlgebra::scale(const Element& a, const Rational& c) const {
  Element out = a;
  for (auto& x : out) x *= c;
  return out;
}

TensorAlgebra::Element TensorAlgebra::multiply(const Element& a, const Element& b) const {
  const int nf = f();
  const int ne = e();
  // blocks[j] holds the theta-polynomial coefficient of pi^j, unreduced.
  std::vector<std::vector<mpq_class>> blocks(2 * ne - 1, std::vector<mpq_class>(2 * nf - 1));
  for (int j1 = 0; j1 < ne; ++j1) {
    for (int i1 = 0; i1 < nf; ++i1) {
      const Rational& x = a[index(i1, j1)];
      if (x.is_zero()) continue;
      for (int j2 = 0; j2 < ne; ++j2) {
        auto& block = blocks[j1 + j2];
        for (int i2 = 0; i2 < nf; ++i2) {
          const Rational& y = b[index(i2, j2)];
          if (!y.is_zero()) block[i1 + i2] += x.get() * y.get();
        }
      }
    }
  }
  const auto& tc = theta_poly_.coefficients();
  for (auto& block : blocks) {
    for (int k = 2 * nf - 2; k >= nf; --k) {
      if (sgn(block[k]) == 0) continue;
      const mpq_class top = block[k];
      for (int i = 0; i < nf; ++i) {
        if (!tc[i].is_zero()) block[k - nf + i] -= top * tc[i].get();
      }
      block[k] = 0;
    }
  }
  const auto& gc = pi_poly_.coefficients();
  for (int k = 2 * ne - 2; k >= ne; --k) {
    for (int l = 0; l < ne; ++l) {
      if (gc[l].is_zero()) continue;
      for (int i = 0; i < nf; ++i) {
        if (sgn(blocks[k][i]) != 0) blocks[k - ne + l][i] -= blocks[k][i] * gc[l].get();
      }
    }
  }
  Element out = zero();
  for (int j = 0; j < ne; ++j) {
    for (int i = 0; i < nf; ++i) out[index(i, j)] = Rational(std::move(blocks[j][i]));
  }
  return out;
}

}  // namespace padic
