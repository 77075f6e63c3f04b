#ifndef PADIC_RATIONAL_HPP_
#define PADIC_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic {

using Integer = mpz_class;

/// Raised for malformed numeric input or violated arithmetic preconditions.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// A prime number. Construction fails for anything that is not prime, so every
/// p-bound context in the library carries a checked modulus.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  Integer integer() const { return Integer(static_cast<unsigned long>(value_)); }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}
  Rational(const Integer& value) : q_(value) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  /// Parses "num/den" or "num" in base 10, sign on the numerator.
  static Rational parse(std::string_view text);

  /// Serializes as "num/den", omitting the denominator when it is 1.
  std::string str() const;

  const mpq_class& get() const { return q_; }
  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned long exponent);

/// v_p of a nonzero integer.
unsigned long integer_valuation(const Integer& x, Prime p);

/// Exact p-adic valuation exponent: a rational, or infinity for zero.
class Valuation {
 public:
  Valuation(Rational value) : value_(std::move(value)) {}
  Valuation(long value) : value_(Rational(value)) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws ArithmeticError when infinite.
  const Rational& value() const;
  std::string str() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);

  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  /// Ordering of exponents; infinity is greatest.
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

/// Symbolic absolute value p^(-exponent); zero when the exponent is infinite.
struct AbsoluteValue {
  Prime p;
  Valuation exponent;

  std::string str() const;
  friend bool operator==(const AbsoluteValue&, const AbsoluteValue&) = default;
};

Valuation valuation(const Rational& x, Prime p);
AbsoluteValue abs_value(const Rational& x, Prime p);
bool is_p_integral(const Rational& x, Prime p);

/// Compares absolute values given by exponents: greater means a has the larger
/// absolute value, i.e. the smaller valuation.
std::strong_ordering compare_abs(const Valuation& a, const Valuation& b);

}  // namespace padic

#endif  // PADIC_RATIONAL_HPP_
