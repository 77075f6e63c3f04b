#ifndef PADIC_POLYNOMIAL_HPP_
#define PADIC_POLYNOMIAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padic/rational.hpp"

namespace padic {

/// Dense univariate polynomial over Q. Coefficient i multiplies X^i; the
/// leading coefficient is nonzero and the zero polynomial is empty.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs)
      : RationalPoly(std::vector<Rational>(coeffs)) {}

  static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
  static RationalPoly monomial(const Rational& c, std::size_t degree);
  static RationalPoly x() { return monomial(Rational(1), 1); }

  /// Comma-separated coefficients, constant term first ("0" for zero).
  static RationalPoly parse(std::string_view text);
  std::string str() const;
  /// Human readable, highest degree first, e.g. "X^2 - 2*X + 1/2".
  std::string pretty(std::string_view var = "X") const;

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == Rational(1); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  RationalPoly monic() const;
  RationalPoly derivative() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator-(const RationalPoly& a) { return a * Rational(-1); }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// a = q*b + r with deg r < deg b. Throws ArithmeticError when b is zero.
std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b);
/// a(b(X)).
RationalPoly compose(const RationalPoly& a, const RationalPoly& b);
RationalPoly pow(const RationalPoly& a, unsigned exponent);

/// Res(a, b) = lc(a)^deg(b) * prod b(r) over the roots r of a. Computed by a
/// primitive pseudo-remainder sequence over Z; both inputs must be nonzero.
Rational resultant(const RationalPoly& a, const RationalPoly& b);

/// Dense polynomial over F_p with reduced coefficients.
class PrimeFieldPoly {
 public:
  explicit PrimeFieldPoly(Prime p) : p_(p) {}
  PrimeFieldPoly(Prime p, std::vector<std::uint64_t> coeffs);

  static PrimeFieldPoly x(Prime p) { return PrimeFieldPoly(p, {0, 1}); }

  Prime modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const;

  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;
  std::string str() const;
  std::string pretty(std::string_view var = "X") const;

  friend PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
  friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;

 private:
  void normalize();
  Prime p_;
  std::vector<std::uint64_t> coeffs_;
};

std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b);
/// base^exponent mod modulus.
PrimeFieldPoly pow_mod(const PrimeFieldPoly& base, const Integer& exponent,
                       const PrimeFieldPoly& modulus);

/// Throws ArithmeticError "not p-integral" when a coefficient has p in its denominator.
PrimeFieldPoly reduce_mod_p(const RationalPoly& f, Prime p);

/// Rabin's deterministic irreducibility test. Rejects constants.
bool is_irreducible_mod_p(const PrimeFieldPoly& f);

struct PrimeFieldFactor {
  PrimeFieldPoly factor;  // monic irreducible
  int multiplicity;
};

/// Complete factorization into monic irreducibles (square-free split,
/// distinct-degree split, deterministic equal-degree split). Factors are sorted
/// by degree then coefficients. The leading unit is dropped.
std::vector<PrimeFieldFactor> factor_mod_p(const PrimeFieldPoly& f);

/// Monic, lower coefficients divisible by p, constant term not divisible by p^2.
/// Requires integer coefficients and degree at least 1.
bool eisenstein_check(const RationalPoly& g, Prime p);

/// Phi_q(X) = X^(q-1) + ... + X + 1 for prime q.
RationalPoly cyclotomic_poly(std::uint64_t q);

/// Orbit of s under multiplication by p modulo n, in generation order.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n, Prime p);
/// Sizes of all cyclotomic cosets mod n, ordered by smallest representative.
std::vector<std::uint64_t> factor_degree_pattern(std::uint64_t n, Prime p);
/// Least k >= 1 with a^k = 1 mod q.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q);

}  // namespace padic

#endif  // PADIC_POLYNOMIAL_HPP_
