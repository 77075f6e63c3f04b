#include "padic/field.hpp"

namespace padic {

namespace {

// Reduces a product of degree <= 2n-2 modulo the monic F, in place.
void reduce_mod_monic(std::vector<mpq_class>& c, const RationalPoly& f) {
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const auto& fc = f.coefficients();
  for (std::size_t k = c.size(); k-- > n;) {
    if (sgn(c[k]) == 0) continue;
    const mpq_class top = c[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (!fc[i].is_zero()) c[k - n + i] -= top * fc[i].get();
    }
    c[k] = 0;
  }
  c.resize(n);
}

}  // namespace

std::shared_ptr<const FieldDescriptor> FieldDescriptor::create(Prime p, RationalPoly defining,
                                                               std::optional<int> e,
                                                               std::optional<int> f) {
  if (defining.degree() < 1 || !defining.is_monic()) {
    throw ArithmeticError("defining polynomial must be monic of degree >= 1");
  }
  const int n = defining.degree();
  if (e && *e < 1) throw ArithmeticError("ramification index must be positive");
  if (f && *f < 1) throw ArithmeticError("residue degree must be positive");
  if (e && f && (*e) * (*f) != n) {
    throw ArithmeticError("e*f = " + std::to_string((*e) * (*f)) + " differs from degree " +
                          std::to_string(n));
  }
  if (e && !f) f = n / *e;
  if (f && !e) e = n / *f;
  if (e && (*e) * (*f) != n) throw ArithmeticError("e does not divide the degree");
  return std::shared_ptr<const FieldDescriptor>(
      new FieldDescriptor(p, std::move(defining), e, f));
}

FieldElement::FieldElement(FieldRef field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw ArithmeticError("field element without a field");
  if (static_cast<int>(coords_.size()) != field_->degree()) {
    throw ArithmeticError("element has " + std::to_string(coords_.size()) +
                          " coordinates, field degree is " + std::to_string(field_->degree()));
  }
}

FieldElement FieldElement::zero(const FieldRef& field) {
  return FieldElement(field, std::vector<Rational>(field->degree()));
}

FieldElement FieldElement::scalar(const FieldRef& field, const Rational& c) {
  std::vector<Rational> v(field->degree());
  v[0] = c;
  return FieldElement(field, std::move(v));
}

FieldElement FieldElement::generator(const FieldRef& field) {
  if (field->degree() == 1) return scalar(field, -field->defining().coeff(0));
  std::vector<Rational> v(field->degree());
  v[1] = Rational(1);
  return FieldElement(field, std::move(v));
}

FieldElement FieldElement::from_polynomial(const FieldRef& field, const RationalPoly& g) {
  RationalPoly r = divmod(g, field->defining()).second;
  std::vector<Rational> v(field->degree());
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) v[i] = r.coefficients()[i];
  return FieldElement(field, std::move(v));
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!field_->same_field(*o.field_)) throw FieldMismatchError("elements of different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  const std::size_t n = a.coords_.size();
  std::vector<mpq_class> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.coords_[j].is_zero()) prod[i + j] += a.coords_[i].get() * b.coords_[j].get();
    }
  }
  reduce_mod_monic(prod, a.field_->defining());
  std::vector<Rational> coords;
  coords.reserve(n);
  for (auto& c : prod) coords.emplace_back(std::move(c));
  return FieldElement(a.field_, std::move(coords));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_field(*b.field_) && a.coords_ == b.coords_;
}

FieldElement pow(const FieldElement& a, unsigned exponent) {
  FieldElement result = FieldElement::one(a.field());
  FieldElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

FieldElement elem_inverse(const FieldElement& a) {
  if (a.is_zero()) throw ArithmeticError("inverse of zero");
  // Extended Euclid on (F, g): track s with s*g = r (mod F).
  RationalPoly r0 = a.field()->defining();
  RationalPoly r1 = a.polynomial();
  RationalPoly s0;
  RationalPoly s1 = RationalPoly::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw ArithmeticError("element shares a factor with F; F is reducible");
  return FieldElement::from_polynomial(a.field(), s1 * (Rational(1) / r1.leading()));
}

Rational field_norm(const FieldElement& a) {
  if (a.is_zero()) return Rational();
  return resultant(a.field()->defining(), a.polynomial());
}

Valuation elem_valuation(const FieldElement& a) {
  if (a.is_zero()) return Valuation::infinity();
  const Rational norm = field_norm(a);
  if (norm.is_zero()) {
    throw ArithmeticError("nonzero element with zero norm: the defining polynomial is reducible");
  }
  const Valuation v = valuation(norm, a.field()->p());
  return Valuation(v.value() / Rational(static_cast<long>(a.field()->degree())));
}

}  // namespace padic
