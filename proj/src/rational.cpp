#include "padic/rational.hpp"

#include <array>
#include <cctype>

namespace padic {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_valid_integer_text(s)) {
    throw ArithmeticError("malformed integer '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases make Miller-Rabin exact below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                          31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) {
    throw ArithmeticError(std::to_string(value) + " is not prime");
  }
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ArithmeticError("sign belongs on the numerator in '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exponent);
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  // Powers of a reduced fraction stay reduced.
  return Rational(q);
}

unsigned long integer_valuation(const Integer& x, Prime p) {
  if (x == 0) throw ArithmeticError("valuation of zero integer");
  mpz_class rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.integer().get_mpz_t());
}

const Rational& Valuation::value() const {
  if (!value_) throw ArithmeticError("valuation is infinite");
  return *value_;
}

std::string Valuation::str() const { return value_ ? value_->str() : "inf"; }

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

std::string AbsoluteValue::str() const {
  if (exponent.is_infinite()) return "0";
  const Rational& v = exponent.value();
  if (v.is_zero()) return "1";
  return std::to_string(p.value()) + "^(" + (-v).str() + ")";
}

Valuation valuation(const Rational& x, Prime p) {
  if (x.is_zero()) return Valuation::infinity();
  long v = static_cast<long>(integer_valuation(x.num(), p)) -
           static_cast<long>(integer_valuation(x.den(), p));
  return Valuation(v);
}

AbsoluteValue abs_value(const Rational& x, Prime p) { return {p, valuation(x, p)}; }

bool is_p_integral(const Rational& x, Prime p) {
  return mpz_divisible_ui_p(x.den().get_mpz_t(), p.value()) == 0;
}

std::strong_ordering compare_abs(const Valuation& a, const Valuation& b) { return b <=> a; }

}  // namespace padic
