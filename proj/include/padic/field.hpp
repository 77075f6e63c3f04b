#ifndef PADIC_FIELD_HPP_
#define PADIC_FIELD_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "padic/polynomial.hpp"
#include "padic/rational.hpp"

namespace padic {

class FieldMismatchError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// K = Q_p(zeta) = Q[X]/(F) for a monic F irreducible over Q_p. The
/// ramification index and residue degree are known for constructed fields and
/// unknown for fields supplied only through F.
class FieldDescriptor {
 public:
  /// Throws ArithmeticError if F is not monic of degree >= 1 or e*f != n.
  static std::shared_ptr<const FieldDescriptor> create(Prime p, RationalPoly defining,
                                                       std::optional<int> e = std::nullopt,
                                                       std::optional<int> f = std::nullopt);

  Prime p() const { return p_; }
  const RationalPoly& defining() const { return defining_; }
  int degree() const { return defining_.degree(); }
  std::optional<int> ramification() const { return e_; }
  std::optional<int> residue_degree() const { return f_; }

  bool same_field(const FieldDescriptor& other) const {
    return this == &other || (p_ == other.p_ && defining_ == other.defining_);
  }

 private:
  FieldDescriptor(Prime p, RationalPoly defining, std::optional<int> e, std::optional<int> f)
      : p_(p), defining_(std::move(defining)), e_(e), f_(f) {}

  Prime p_;
  RationalPoly defining_;
  std::optional<int> e_;
  std::optional<int> f_;
};

using FieldRef = std::shared_ptr<const FieldDescriptor>;

/// Element of K in coordinates over the power basis 1, zeta, ..., zeta^(n-1).
class FieldElement {
 public:
  FieldElement(FieldRef field, std::vector<Rational> coords);

  static FieldElement zero(const FieldRef& field);
  static FieldElement scalar(const FieldRef& field, const Rational& c);
  static FieldElement one(const FieldRef& field) { return scalar(field, Rational(1)); }
  /// zeta itself.
  static FieldElement generator(const FieldRef& field);
  /// g(zeta) for any rational polynomial g.
  static FieldElement from_polynomial(const FieldRef& field, const RationalPoly& g);

  const FieldRef& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  RationalPoly polynomial() const { return RationalPoly(coords_); }
  bool is_zero() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator-(const FieldElement& a) { return a * Rational(-1); }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void require_same_field(const FieldElement& o) const;

  FieldRef field_;
  std::vector<Rational> coords_;
};

FieldElement pow(const FieldElement& a, unsigned exponent);
/// Extended gcd against F. Throws ArithmeticError for zero.
FieldElement elem_inverse(const FieldElement& a);
/// N_{K/Q_p}(a) = Res(F, g) where g is the coordinate polynomial of a.
Rational field_norm(const FieldElement& a);
/// v_p(N(a)) / n; infinity for zero.
Valuation elem_valuation(const FieldElement& a);

}  // namespace padic

#endif  // PADIC_FIELD_HPP_
