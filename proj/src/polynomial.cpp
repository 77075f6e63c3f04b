#include "padic/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace padic {

namespace {

using u128 = unsigned __int128;
using IntPoly = std::vector<Integer>;

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(current);
      current.clear();
    } else if (ch != ' ' && ch != '\t' && ch != '\n') {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::string term(const std::string& magnitude, std::size_t degree, std::string_view var,
                 bool unit) {
  std::string mono;
  if (degree == 1) {
    mono = std::string(var);
  } else if (degree > 1) {
    mono = std::string(var) + "^" + std::to_string(degree);
  }
  if (mono.empty()) return magnitude;
  return unit ? mono : magnitude + "*" + mono;
}

// --- integer polynomial helpers for the resultant -------------------------

int int_degree(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }

void int_normalize(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer int_content(const IntPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// a = scale * A with A a primitive integer polynomial with positive leading coefficient.
std::pair<Rational, IntPoly> primitive_part(const RationalPoly& a) {
  Integer lcm_den = 1;
  for (const auto& c : a.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  }
  IntPoly out;
  out.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) {
    out.push_back(c.num() * (lcm_den / c.den()));
  }
  Integer g = int_content(out);
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {Rational(g, lcm_den), out};
}

// lc(b)^steps * a mod b over Z; steps is returned through the out parameter.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b, int& steps) {
  const int n = int_degree(b);
  const Integer& lb = b.back();
  steps = 0;
  while (int_degree(a) >= n) {
    ++steps;
    const int shift = int_degree(a) - n;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= n; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    int_normalize(a);
  }
  return a;
}

}  // namespace

// --- RationalPoly ----------------------------------------------------------

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::parse(std::string_view text) {
  std::vector<Rational> coeffs;
  for (const auto& part : split_commas(text)) {
    if (part.empty()) throw ArithmeticError("empty coefficient in polynomial '" +
                                            std::string(text) + "'");
    coeffs.push_back(Rational::parse(part));
  }
  return RationalPoly(std::move(coeffs));
}

std::string RationalPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += coeffs_[i].str();
  }
  return out;
}

std::string RationalPoly::pretty(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    const std::string t = term(mag.str(), k, var, mag == Rational(1));
    if (out.empty()) {
      out = negative ? "-" + t : t;
    } else {
      out += negative ? " - " : " + ";
      out += t;
    }
  }
  return out;
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

const Rational& RationalPoly::leading() const {
  if (is_zero()) throw ArithmeticError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

RationalPoly RationalPoly::monic() const {
  const Rational inv = Rational(1) / leading();
  return *this * inv;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i].get() * b.coeffs_[j].get();
    }
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(out.size());
  for (auto& c : out) coeffs.emplace_back(std::move(c));
  return RationalPoly(std::move(coeffs));
}

std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(a.degree() - b.degree() + 1);
  const Rational inv_lead = Rational(1) / b.leading();
  const int n = b.degree();
  for (int k = a.degree(); k >= n; --k) {
    if (rem[k].is_zero()) continue;
    const Rational factor = rem[k] * inv_lead;
    quot[k - n] = factor;
    for (int i = 0; i <= n; ++i) rem[k - n + i] -= factor * b.coefficients()[i];
  }
  rem.resize(n);
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly compose(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly acc;
  for (std::size_t k = a.coefficients().size(); k-- > 0;) {
    acc = acc * b + RationalPoly::constant(a.coefficients()[k]);
  }
  return acc;
}

RationalPoly pow(const RationalPoly& a, unsigned exponent) {
  RationalPoly result = RationalPoly::constant(Rational(1));
  RationalPoly base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

Rational resultant(const RationalPoly& a_in, const RationalPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) {
    throw ArithmeticError("resultant of the zero polynomial");
  }
  auto [ca, A] = primitive_part(a_in);
  auto [cb, B] = primitive_part(b_in);
  // Res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * Res(A, B).
  Rational acc = pow(ca, int_degree(B)) * pow(cb, int_degree(A));
  if (int_degree(A) < int_degree(B)) {
    if ((int_degree(A) * int_degree(B)) % 2 == 1) acc = -acc;
    std::swap(A, B);
  }
  // Invariant: result = acc * Res(A, B) with deg A >= deg B.
  for (;;) {
    const int m = int_degree(A);
    const int n = int_degree(B);
    if (n == 0) return acc * pow(Rational(B[0]), m);
    int steps = 0;
    IntPoly R = pseudo_remainder(A, B, steps);
    if (R.empty()) return Rational();
    const int r = int_degree(R);
    // R = lc(B)^steps * (A mod B). Res(A, B) = (-1)^(mn) lc(B)^(m-r) Res(B, A mod B)
    // and Res(B, c*R) = c^n Res(B, R).
    const Rational lb(B.back());
    Rational factor = pow(lb, m - r);
    factor /= pow(lb, static_cast<unsigned long>(steps * n));
    Integer content = int_content(R);
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    factor *= pow(Rational(content), n);
    if ((static_cast<long>(m) * n) % 2 == 1) factor = -factor;
    acc *= factor;
    A = std::move(B);
    B = std::move(R);
  }
}

// --- PrimeFieldPoly --------------------------------------------------------

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;
  return (s >= m || s < a) ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ArithmeticError("inverse of zero mod p");
  return pow_mod_u64(a, p - 2, p);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

PrimeFieldPoly::PrimeFieldPoly(Prime p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_.value();
  normalize();
}

void PrimeFieldPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t PrimeFieldPoly::leading() const {
  if (is_zero()) throw ArithmeticError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  const std::uint64_t inv = inv_mod(leading(), p_.value());
  PrimeFieldPoly out = *this;
  for (auto& c : out.coeffs_) c = mul_mod(c, inv, p_.value());
  return out;
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out.push_back(mul_mod(coeffs_[i], i % p_.value(), p_.value()));
  }
  return PrimeFieldPoly(p_, std::move(out));
}

std::string PrimeFieldPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs_[i]);
  }
  return out;
}

std::string PrimeFieldPoly::pretty(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    const std::string t = term(std::to_string(coeffs_[k]), k, var, coeffs_[k] == 1);
    out += out.empty() ? t : " + " + t;
  }
  return out;
}

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = add_mod(a.coeff(i), b.coeff(i), a.p_.value());
  }
  return PrimeFieldPoly(a.p_, std::move(out));
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = sub_mod(a.coeff(i), b.coeff(i), a.p_.value());
  }
  return PrimeFieldPoly(a.p_, std::move(out));
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return PrimeFieldPoly(a.p_);
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
  }
  return PrimeFieldPoly(a.p_, std::move(out));
}

std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& a,
                                                 const PrimeFieldPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const Prime prime = a.modulus();
  const std::uint64_t p = prime.value();
  if (a.degree() < b.degree()) return {PrimeFieldPoly(prime), a};
  std::vector<std::uint64_t> rem = a.coefficients();
  std::vector<std::uint64_t> quot(a.degree() - b.degree() + 1);
  const std::uint64_t inv = inv_mod(b.leading(), p);
  const int n = b.degree();
  for (int k = a.degree(); k >= n; --k) {
    if (rem[k] == 0) continue;
    const std::uint64_t factor = mul_mod(rem[k], inv, p);
    quot[k - n] = factor;
    for (int i = 0; i <= n; ++i) {
      rem[k - n + i] = sub_mod(rem[k - n + i], mul_mod(factor, b.coeff(i), p), p);
    }
  }
  rem.resize(n);
  return {PrimeFieldPoly(prime, std::move(quot)), PrimeFieldPoly(prime, std::move(rem))};
}

PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b) {
  while (!b.is_zero()) {
    PrimeFieldPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PrimeFieldPoly pow_mod(const PrimeFieldPoly& base, const Integer& exponent,
                       const PrimeFieldPoly& modulus) {
  PrimeFieldPoly result = divmod(PrimeFieldPoly(base.modulus(), {1}), modulus).second;
  PrimeFieldPoly b = divmod(base, modulus).second;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

PrimeFieldPoly reduce_mod_p(const RationalPoly& f, Prime p) {
  std::vector<std::uint64_t> out;
  const Integer pz = p.integer();
  for (const auto& c : f.coefficients()) {
    if (!is_p_integral(c, p)) {
      throw ArithmeticError("coefficient " + c.str() + " is not p-integral for p = " +
                            std::to_string(p.value()));
    }
    Integer num_mod, den_mod, den_inv;
    mpz_mod(num_mod.get_mpz_t(), c.num().get_mpz_t(), pz.get_mpz_t());
    mpz_mod(den_mod.get_mpz_t(), c.den().get_mpz_t(), pz.get_mpz_t());
    mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), pz.get_mpz_t());
    Integer v = (num_mod * den_inv) % pz;
    out.push_back(v.get_ui());
  }
  return PrimeFieldPoly(p, std::move(out));
}

bool is_irreducible_mod_p(const PrimeFieldPoly& f_in) {
  if (f_in.degree() < 1) throw ArithmeticError("irreducibility of a constant polynomial");
  const PrimeFieldPoly f = f_in.monic();
  const int d = f.degree();
  if (d == 1) return true;
  const Prime prime = f.modulus();
  const Integer p = prime.integer();
  const PrimeFieldPoly x = PrimeFieldPoly::x(prime);
  // frob[k] = X^(p^k) mod f.
  std::vector<PrimeFieldPoly> frob{divmod(x, f).second};
  for (int k = 1; k <= d; ++k) frob.push_back(pow_mod(frob.back(), p, f));
  if (!(frob[d] == divmod(x, f).second)) return false;
  for (std::uint64_t r : prime_divisors(static_cast<std::uint64_t>(d))) {
    const PrimeFieldPoly g = gcd(f, frob[d / r] - x);
    if (!g.is_one()) return false;
  }
  return true;
}

namespace {

// Square-free decomposition (char p aware): pairs (square-free part, multiplicity).
void square_free(const PrimeFieldPoly& f, int scale, std::vector<PrimeFieldFactor>& out) {
  const Prime prime = f.modulus();
  const std::uint64_t p = prime.value();
  auto pth_root = [&](const PrimeFieldPoly& g) {
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < g.coefficients().size(); i += p) c.push_back(g.coeff(i));
    // Coefficients of a p-th power lie in F_p where Frobenius is the identity.
    return PrimeFieldPoly(prime, std::move(c));
  };
  if (f.degree() < 1) return;
  const PrimeFieldPoly d = f.derivative();
  if (d.is_zero()) {
    square_free(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  PrimeFieldPoly c = gcd(f, d);
  PrimeFieldPoly w = divmod(f, c).first;
  int i = 1;
  while (!w.is_one()) {
    PrimeFieldPoly y = gcd(w, c);
    PrimeFieldPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i * scale});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) square_free(pth_root(c.monic()), scale * static_cast<int>(p), out);
}

// Polynomial whose coefficients are the base-p digits of index.
PrimeFieldPoly enumerate_poly(Prime prime, std::uint64_t index, int max_degree) {
  std::vector<std::uint64_t> c;
  while (index > 0 && static_cast<int>(c.size()) <= max_degree) {
    c.push_back(index % prime.value());
    index /= prime.value();
  }
  return PrimeFieldPoly(prime, std::move(c));
}

void equal_degree_split(const PrimeFieldPoly& g, int d, std::vector<PrimeFieldPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Prime prime = g.modulus();
  const std::uint64_t p = prime.value();
  Integer pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  for (std::uint64_t index = p;; ++index) {
    const PrimeFieldPoly h = enumerate_poly(prime, index, g.degree() - 1);
    if (h.degree() < 1) continue;
    PrimeFieldPoly w(prime);
    if (p == 2) {
      // Trace map h + h^2 + ... + h^(2^(d-1)).
      PrimeFieldPoly power = divmod(h, g).second;
      w = power;
      for (int k = 1; k < d; ++k) {
        power = divmod(power * power, g).second;
        w = w + power;
      }
    } else {
      w = pow_mod(h, (pd - 1) / 2, g) - PrimeFieldPoly(prime, {1});
    }
    const PrimeFieldPoly s = gcd(g, w);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree_split(s, d, out);
      equal_degree_split(divmod(g, s).first.monic(), d, out);
      return;
    }
  }
}

}  // namespace

std::vector<PrimeFieldFactor> factor_mod_p(const PrimeFieldPoly& f) {
  if (f.degree() < 1) throw ArithmeticError("factorization of a constant polynomial");
  const Prime prime = f.modulus();
  const Integer p = prime.integer();
  std::vector<PrimeFieldFactor> sqf;
  square_free(f.monic(), 1, sqf);
  std::vector<PrimeFieldFactor> out;
  const PrimeFieldPoly x = PrimeFieldPoly::x(prime);
  for (const auto& [part, mult] : sqf) {
    PrimeFieldPoly g = part;
    PrimeFieldPoly h = divmod(x, g).second;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = pow_mod(h, p, g);
      PrimeFieldPoly gd = gcd(g, h - x);
      if (gd.degree() > 0) {
        std::vector<PrimeFieldPoly> pieces;
        equal_degree_split(gd, d, pieces);
        for (auto& piece : pieces) out.push_back({piece, mult});
        g = divmod(g, gd).first.monic();
        h = divmod(h, g).second;
      }
    }
    if (g.degree() > 0) out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const PrimeFieldFactor& a, const PrimeFieldFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coefficients() < b.factor.coefficients();
  });
  // Merge equal factors that arrived from different square-free layers.
  std::vector<PrimeFieldFactor> merged;
  for (auto& item : out) {
    if (!merged.empty() && merged.back().factor == item.factor) {
      merged.back().multiplicity += item.multiplicity;
    } else {
      merged.push_back(std::move(item));
    }
  }
  return merged;
}

bool eisenstein_check(const RationalPoly& g, Prime p) {
  if (g.degree() < 1) throw ArithmeticError("Eisenstein check needs degree >= 1");
  for (const auto& c : g.coefficients()) {
    if (!c.is_integer()) throw ArithmeticError("Eisenstein check needs integer coefficients");
  }
  if (!g.is_monic()) return false;
  const Integer pz = p.integer();
  for (int i = 0; i < g.degree(); ++i) {
    if (!mpz_divisible_p(g.coefficients()[i].num().get_mpz_t(), pz.get_mpz_t())) return false;
  }
  const Integer p2 = pz * pz;
  return !mpz_divisible_p(g.coefficients()[0].num().get_mpz_t(), p2.get_mpz_t());
}

RationalPoly cyclotomic_poly(std::uint64_t q) {
  if (!is_prime(q)) throw ArithmeticError(std::to_string(q) + " is not prime");
  return RationalPoly(std::vector<Rational>(q, Rational(1)));
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t n, Prime p) {
  if (n == 0 || std::gcd(n, p.value()) != 1) {
    throw ArithmeticError("cyclotomic coset needs gcd(n, p) = 1");
  }
  const std::uint64_t start = s % n;
  std::vector<std::uint64_t> out{start};
  std::uint64_t cur = mul_mod(start, p.value() % n, n);
  while (cur != start) {
    out.push_back(cur);
    cur = mul_mod(cur, p.value() % n, n);
  }
  return out;
}

std::vector<std::uint64_t> factor_degree_pattern(std::uint64_t n, Prime p) {
  if (n == 0 || std::gcd(n, p.value()) != 1) {
    throw ArithmeticError("factor degree pattern needs gcd(n, p) = 1");
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto coset = cyclotomic_coset(s, n, p);
    for (auto r : coset) seen[r] = true;
    sizes.push_back(coset.size());
  }
  return sizes;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t q) {
  if (!is_prime(q)) throw ArithmeticError(std::to_string(q) + " is not prime");
  if (a % q == 0) throw ArithmeticError("multiplicative order needs q not dividing a");
  const std::uint64_t base = a % q;
  std::uint64_t cur = base;
  std::uint64_t k = 1;
  while (cur != 1) {
    cur = mul_mod(cur, base, q);
    ++k;
  }
  return k;
}

}  // namespace padic
