#ifndef PADIC_TENSOR_ALGEBRA_HPP_
#define PADIC_TENSOR_ALGEBRA_HPP_

#include <vector>

#include "padic/polynomial.hpp"

namespace padic {

/// Q[theta, pi] / (T(theta), G(pi)) with T of degree f and G of degree e, both
/// monic. Elements are coordinate vectors over theta^i pi^j stored at index
/// j*f + i, so the f entries of grade j are contiguous.
class TensorAlgebra {
 public:
  using Element = std::vector<Rational>;

  TensorAlgebra(RationalPoly theta_poly, RationalPoly pi_poly);

  int f() const { return theta_poly_.degree(); }
  int e() const { return pi_poly_.degree(); }
  int dimension() const { return f() * e(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j * f() + i); }

  Element zero() const { return Element(dimension()); }
  Element basis(int i, int j) const;
  /// theta reduced into the algebra (handles f = 1).
  Element theta() const;
  Element pi() const;

  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& c) const;
  Element multiply(const Element& a, const Element& b) const;

 private:
  RationalPoly theta_poly_;
  RationalPoly pi_poly_;
};

}  // namespace padic

#endif  // PADIC_TENSOR_ALGEBRA_HPP_
