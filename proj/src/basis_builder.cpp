#include "padic/basis_builder.hpp"

#include <sstream>

#include "padic/tensor_algebra.hpp"

namespace padic {

namespace {

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  Integer r;
  const Integer b(static_cast<unsigned long>(base));
  const Integer m(static_cast<unsigned long>(modulus));
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), exponent, m.get_mpz_t());
  return r.get_ui();
}

FieldElement evaluate_at(const RationalPoly& poly, const FieldElement& x) {
  FieldElement acc = FieldElement::zero(x.field());
  const auto& c = poly.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * x + FieldElement::scalar(x.field(), c[k]);
  }
  return acc;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

ParamsReport validate_params(std::uint64_t p, std::uint64_t q, int e) {
  ParamsReport report;
  auto& v = report.violations;
  const bool p_prime = is_prime(p);
  const bool q_prime = is_prime(q);
  if (!p_prime) v.push_back("p = " + std::to_string(p) + " is not prime");
  if (!q_prime) v.push_back("q = " + std::to_string(q) + " is not prime");
  if (q_prime) {
    if (q == 2 || !is_prime((q - 1) / 2)) {
      v.push_back("q0 = (q-1)/2 = " + std::to_string((q - 1) / 2) + " is not prime");
    }
  }
  if (e < 2) v.push_back("e = " + std::to_string(e) + " must be at least 2");
  if (q_prime && q > 2) {
    const std::uint64_t r = p % q;
    if (r == 0) {
      v.push_back("p divides q");
    } else {
      if (r == q - 1) v.push_back("p = -1 mod q");
      if (power_mod(r, (q - 1) / 2, q) != q - 1) {
        v.push_back("p is a quadratic residue mod q");
      }
      const std::uint64_t order = multiplicative_order(r, q);
      if (order != q - 1) {
        v.push_back("multiplicative order of p mod q is " + std::to_string(order) + ", not " +
                    std::to_string(q - 1));
      }
    }
  }
  return report;
}

ParamsReport check_construction_params(const ConstructionParams& params) {
  ParamsReport report = validate_params(params.p.value(), params.q, params.e);
  auto& v = report.violations;
  if (!report.ok()) return report;
  const int f = params.f();
  if (static_cast<int>(params.a.size()) != f) {
    v.push_back("a has " + std::to_string(params.a.size()) + " entries, expected f = " +
                std::to_string(f));
  } else if (!params.allow_custom_a) {
    bool unit = false;
    for (int i = 0; i + 1 < f; ++i) {
      if (!is_p_integral(params.a[i], params.p)) {
        v.push_back("a_" + std::to_string(i) + " = " + params.a[i].str() + " is not p-integral");
      } else if (valuation(params.a[i], params.p) == Valuation(0)) {
        unit = true;
      }
    }
    if (!unit) v.push_back("no a_i with i < f-1 is a p-unit");
    if (is_p_integral(params.a[f - 1], params.p)) {
      v.push_back("a_{f-1} = " + params.a[f - 1].str() + " is p-integral");
    }
  }
  if (params.eisenstein.degree() != params.e) {
    v.push_back("G has degree " + std::to_string(params.eisenstein.degree()) + ", expected e = " +
                std::to_string(params.e));
  }
  bool eisenstein = false;
  try {
    eisenstein = eisenstein_check(params.eisenstein, params.p);
  } catch (const ArithmeticError&) {
  }
  if (!eisenstein) v.push_back("G = " + params.eisenstein.pretty() + " is not Eisenstein");
  return report;
}

ConstructionParams sample_params(std::uint64_t p, std::uint64_t q, int e, DeterministicRng& rng,
                                 const SamplingOptions& options) {
  const ParamsReport report = validate_params(p, q, e);
  if (!report.ok()) throw ConstructionError("invalid parameters: " + join(report.violations));
  const std::uint64_t bound = std::max<std::uint64_t>(options.bound, 2);
  ConstructionParams params;
  params.p = Prime(p);
  params.q = q;
  params.e = e;
  const int f = params.f();
  for (int attempt = 0;; ++attempt) {
    if (attempt == 64) throw ConstructionError("could not sample a primitive combination");
    params.a.assign(f, Rational());
    bool unit = false;
    while (!unit) {
      for (int i = 0; i + 1 < f; ++i) {
        const std::uint64_t c = rng.below(p * bound);
        params.a[i] = Rational(static_cast<long>(c));
        unit = unit || c % p != 0;
      }
    }
    params.a[f - 1] = Rational(Integer(1), params.p.integer());
    try {
      minimal_poly_combination(params.a, q);
      break;
    } catch (const ConstructionError&) {
    }
  }
  std::uint64_t u = 0;
  do {
    u = 1 + rng.below(bound - 1);
  } while (u % p == 0);
  std::vector<Rational> g(e + 1);
  g[e] = Rational(1);
  const Rational pp(params.p.integer());
  if (options.full_eisenstein) {
    for (int i = 1; i < e; ++i) g[i] = pp * Rational(static_cast<long>(rng.below(bound)));
    g[0] = pp * Rational(static_cast<long>(u));
  } else {
    g[0] = -(pp * Rational(static_cast<long>(u)));
  }
  params.eisenstein = RationalPoly(std::move(g));
  return params;
}

RationalPoly minimal_poly_combination(const std::vector<Rational>& a, const RationalPoly& theta_poly) {
  const int f = theta_poly.degree();
  if (!theta_poly.is_monic() || f < 1) throw ConstructionError("T must be monic of degree >= 1");
  if (static_cast<int>(a.size()) != f) {
    throw ConstructionError("a has " + std::to_string(a.size()) + " entries, expected " +
                            std::to_string(f));
  }
  const RationalPoly combo(a);
  std::vector<RationalPoly> powers{RationalPoly::constant(Rational(1))};
  for (int k = 1; k <= f; ++k) powers.push_back(divmod(powers.back() * combo, theta_poly).second);
  RationalMatrix m(f, f);
  std::vector<Rational> rhs(f);
  for (int r = 0; r < f; ++r) {
    for (int k = 0; k < f; ++k) m(r, k) = powers[k].coeff(r);
    rhs[r] = -powers[f].coeff(r);
  }
  std::vector<Rational> h;
  try {
    h = solve(m, rhs);
  } catch (const SingularMatrixError&) {
    throw ConstructionError("degenerate a: the combination does not generate the residue field");
  }
  h.push_back(Rational(1));
  return RationalPoly(std::move(h));
}

RationalPoly minimal_poly_combination(const std::vector<Rational>& a, std::uint64_t q) {
  return minimal_poly_combination(a, cyclotomic_poly(q));
}

RationalPoly compose_minimal_poly(const RationalPoly& g, const RationalPoly& h) {
  if (!g.is_monic() || !h.is_monic() || g.degree() < 1 || h.degree() < 1) {
    throw ConstructionError("compose_minimal_poly needs monic inputs of degree >= 1");
  }
  const int n = g.degree() * h.degree();
  // Newton divided differences over the nodes 0, 1, ..., n.
  std::vector<Rational> d(n + 1);
  for (int k = 0; k <= n; ++k) {
    const RationalPoly shifted = compose(h, RationalPoly{Rational(k), Rational(-1)});
    d[k] = resultant(g, shifted);
  }
  for (int level = 1; level <= n; ++level) {
    for (int k = n; k >= level; --k) d[k] = (d[k] - d[k - 1]) / Rational(level);
  }
  RationalPoly out = RationalPoly::constant(d[n]);
  for (int k = n - 1; k >= 0; --k) {
    out = out * RationalPoly{Rational(-k), Rational(1)} + RationalPoly::constant(d[k]);
  }
  if (out.degree() != n || !out.is_monic()) {
    throw ConstructionError("composed polynomial has degree " + std::to_string(out.degree()) +
                            ", expected monic of degree " + std::to_string(n));
  }
  return out;
}

OrthogonalBasis::OrthogonalBasis(int f, int e, std::vector<FieldElement> elements,
                                 RationalMatrix zeta_powers)
    : f_(f), e_(e), elements_(std::move(elements)), zeta_powers_(std::move(zeta_powers)) {
  const std::size_t n = static_cast<std::size_t>(f) * e;
  if (f < 1 || e < 1 || elements_.size() != n || zeta_powers_.rows() != n ||
      zeta_powers_.cols() != n) {
    throw ArithmeticError("orthogonal basis shape mismatch");
  }
}

OrthogonalBasis OrthogonalBasis::from_generators(const FieldElement& theta, const FieldElement& pi,
                                                 int f, int e) {
  std::vector<FieldElement> elements;
  std::vector<std::vector<Rational>> rows;
  FieldElement pi_power = FieldElement::one(theta.field());
  for (int j = 0; j < e; ++j) {
    FieldElement x = pi_power;
    for (int i = 0; i < f; ++i) {
      elements.push_back(x);
      rows.push_back(x.coords());
      x = x * theta;
    }
    pi_power = pi_power * pi;
  }
  RationalMatrix m = inverse(RationalMatrix::from_rows(rows));
  return OrthogonalBasis(f, e, std::move(elements), std::move(m));
}

Valuation OrthogonalBasis::valuation_of(std::size_t k) const {
  return Valuation(Rational(Integer(grade(k)), Integer(e_)));
}

std::vector<Rational> OrthogonalBasis::coordinates(const FieldElement& t) const {
  if (!t.field()->same_field(*field())) throw FieldMismatchError("element from another field");
  return multiply(t.coords(), zeta_powers_);
}

FieldElement OrthogonalBasis::combine(const std::vector<Rational>& coords) const {
  if (coords.size() != size()) throw ArithmeticError("coordinate vector has the wrong length");
  FieldElement out = FieldElement::zero(field());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k].is_zero()) out += elements_[k] * coords[k];
  }
  return out;
}

Valuation OrthogonalBasis::coordinate_valuation(const std::vector<Rational>& coords) const {
  Valuation best = Valuation::infinity();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    best = std::min(best, valuation(coords[k], field()->p()) + valuation_of(k));
  }
  return best;
}

VectorFamily OrthogonalBasis::family() const {
  VectorFamily out;
  out.elements = elements_;
  for (std::size_t k = 0; k < size(); ++k) out.grades.push_back(grade(k));
  return out;
}

GeneratorExpansion express_generators(const FieldRef& field, const RationalPoly& theta_poly,
                                      const RationalPoly& eisenstein, const std::vector<Rational>& a) {
  const TensorAlgebra algebra(theta_poly, eisenstein);
  const int f = algebra.f();
  const int e = algebra.e();
  const int n = algebra.dimension();
  if (field->degree() != n) throw ConstructionError("field degree differs from e*f");
  if (static_cast<int>(a.size()) != f) throw ConstructionError("a does not have f entries");

  TensorAlgebra::Element zeta = algebra.pi();
  TensorAlgebra::Element theta_power = algebra.basis(0, 0);
  for (int i = 0; i < f; ++i) {
    zeta = algebra.add(zeta, algebra.scale(theta_power, a[i]));
    theta_power = algebra.multiply(theta_power, algebra.theta());
  }
  std::vector<std::vector<Rational>> rows;
  TensorAlgebra::Element power = algebra.basis(0, 0);
  for (int k = 0; k < n; ++k) {
    rows.push_back(power);
    power = algebra.multiply(power, zeta);
  }
  // power is now zeta^n; F(zeta) must vanish in the algebra.
  const auto& fc = field->defining().coefficients();
  for (int k = 0; k < n; ++k) power = algebra.add(power, algebra.scale(rows[k], fc[k]));
  for (const auto& c : power) {
    if (!c.is_zero()) throw ConstructionError("F does not vanish at zeta");
  }

  RationalMatrix m = RationalMatrix::from_rows(rows);
  RationalMatrix inv;
  try {
    inv = inverse(m);
  } catch (const SingularMatrixError&) {
    throw ConstructionError("powers of zeta do not span the algebra");
  }
  std::vector<FieldElement> elements;
  elements.reserve(n);
  for (int k = 0; k < n; ++k) elements.emplace_back(field, inv.row(k));
  FieldElement theta = f > 1 ? elements[algebra.index(1, 0)]
                             : FieldElement::scalar(field, -theta_poly.coeff(0));
  FieldElement pi = e > 1 ? elements[algebra.index(0, 1)]
                          : FieldElement::scalar(field, -eisenstein.coeff(0));
  return GeneratorExpansion{std::move(theta), std::move(pi),
                            OrthogonalBasis(f, e, std::move(elements), std::move(m))};
}

GeneratorExpansion express_generators(const ConstructionParams& params, const RationalPoly& f) {
  const FieldRef field = FieldDescriptor::create(params.p, f, params.e, params.f());
  return express_generators(field, cyclotomic_poly(params.q), params.eisenstein, params.a);
}

bool BasisCertificate::valid() const {
  if (!(residue_irreducible && eisenstein && theta_root && pi_root && zeta_identity)) return false;
  if (theta_valuation != Valuation(0) || pi_valuation.is_infinite()) return false;
  if (pi_valuation.value().sign() <= 0 || pi_valuation.value().num() != 1) return false;
  return !enumeration || enumeration->orthogonal;
}

ConstructionResult build_composite(Prime p, const RationalPoly& theta_poly,
                                   const RationalPoly& eisenstein, const std::vector<Rational>& a,
                                   const BuildOptions& options) {
  const RationalPoly h = minimal_poly_combination(a, theta_poly);
  const RationalPoly f = compose_minimal_poly(eisenstein, h);
  const int e = eisenstein.degree();
  const int fdeg = theta_poly.degree();
  const FieldRef field = FieldDescriptor::create(p, f, e, fdeg);
  GeneratorExpansion gens = express_generators(field, theta_poly, eisenstein, a);

  BasisCertificate cert;
  try {
    cert.residue_irreducible = power_basis_orthogonality(theta_poly, p);
  } catch (const ArithmeticError&) {
  }
  try {
    cert.eisenstein = eisenstein_check(eisenstein, p);
  } catch (const ArithmeticError&) {
  }
  cert.theta_root = evaluate_at(theta_poly, gens.theta).is_zero();
  cert.pi_root = evaluate_at(eisenstein, gens.pi).is_zero();
  FieldElement zeta = gens.pi;
  FieldElement theta_power = FieldElement::one(field);
  for (int i = 0; i < fdeg; ++i) {
    zeta += theta_power * a[i];
    theta_power = theta_power * gens.theta;
  }
  cert.zeta_identity = zeta == FieldElement::generator(field);
  cert.theta_valuation = elem_valuation(gens.theta);
  cert.pi_valuation = elem_valuation(gens.pi);
  std::string enumeration_error;
  if (digit_enumeration_size(p, static_cast<std::size_t>(fdeg), options.enumeration_limit)) {
    cert.method = "digit enumeration";
    try {
      cert.enumeration = check_orthogonal_graded(gens.basis.family(), options.enumeration_limit);
    } catch (const OrthogonalityPreconditionError& err) {
      enumeration_error = err.what();
    }
  } else {
    cert.method = "residue irreducibility";
  }

  std::vector<std::string> failures;
  if (!cert.residue_irreducible) failures.push_back("T is not irreducible mod p");
  if (!cert.eisenstein) failures.push_back("G is not Eisenstein");
  if (!cert.theta_root) failures.push_back("T(theta) != 0");
  if (!cert.pi_root) failures.push_back("G(pi) != 0");
  if (!cert.zeta_identity) failures.push_back("pi + sum a_i theta^i != zeta");
  if (cert.theta_valuation != Valuation(0)) {
    failures.push_back("v(theta) = " + cert.theta_valuation.str());
  }
  if (cert.pi_valuation != Valuation(Rational(Integer(1), Integer(e)))) {
    failures.push_back("v(pi) = " + cert.pi_valuation.str());
  }
  if (!enumeration_error.empty()) failures.push_back("digit enumeration: " + enumeration_error);
  if (cert.enumeration && !cert.enumeration->orthogonal) {
    for (const auto& g : cert.enumeration->grades) {
      if (g.report.orthogonal) continue;
      std::ostringstream os;
      os << "grade " << g.grade << " fails digit enumeration at (";
      for (std::size_t k = 0; k < g.report.counterexample->size(); ++k) {
        os << (k ? "," : "") << (*g.report.counterexample)[k];
      }
      os << ")";
      failures.push_back(os.str());
    }
  }
  if (!failures.empty()) throw ConstructionError("certification failed: " + join(failures));
  return ConstructionResult{p,     theta_poly,     eisenstein,          a, h, field, gens.theta,
                            gens.pi, std::move(gens.basis), std::move(cert)};
}

ConstructionResult build(const ConstructionParams& params, const BuildOptions& options) {
  const ParamsReport report = check_construction_params(params);
  if (!report.ok()) throw ConstructionError("invalid parameters: " + join(report.violations));
  return build_composite(params.p, cyclotomic_poly(params.q), params.eisenstein, params.a, options);
}

}  // namespace padic
