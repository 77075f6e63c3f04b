#ifndef PADIC_BASIS_BUILDER_HPP_
#define PADIC_BASIS_BUILDER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/field.hpp"
#include "padic/linalg.hpp"
#include "padic/orthogonality.hpp"
#include "padic/polynomial.hpp"
#include "padic/xof.hpp"

namespace padic {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One message per failed condition; empty when the parameters are usable.
struct ParamsReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks p, q, q0 = (q-1)/2 prime, p not -1 mod q, p a non-residue mod q,
/// e >= 2 and ord_q(p) = q - 1. Raw integers so that non-primes can be reported.
ParamsReport validate_params(std::uint64_t p, std::uint64_t q, int e);

struct ConstructionParams {
  Prime p{2};
  std::uint64_t q = 0;
  int e = 0;
  /// Coefficients a_0..a_{f-1} of theta' = sum a_i theta^i.
  std::vector<Rational> a;
  /// Eisenstein polynomial of degree e.
  RationalPoly eisenstein;
  /// Skip the shape conditions on a (p-integral a_i with a unit among them,
  /// a_{f-1} not p-integral). Used for zeta = theta + pi.
  bool allow_custom_a = false;

  int f() const { return static_cast<int>(q) - 1; }
  int n() const { return f() * e; }
};

/// validate_params plus the conditions on a and G.
ParamsReport check_construction_params(const ConstructionParams& params);

struct SamplingOptions {
  /// a_i for i < f-1 come from [0, p*bound); Eisenstein coefficients from [0, bound).
  std::uint64_t bound = 4;
  /// Random lower coefficients in G instead of X^e - p*u.
  bool full_eisenstein = false;
};

/// Default a (a_{f-1} = 1/p) and G drawn from rng. Throws ConstructionError if
/// (p, q, e) fail validate_params.
ConstructionParams sample_params(std::uint64_t p, std::uint64_t q, int e, DeterministicRng& rng,
                                 const SamplingOptions& options = {});

/// Minimal polynomial of theta' = sum a_i theta^i over Q, theta a root of the
/// monic irreducible T of degree f = a.size(). Throws ConstructionError when
/// theta' does not generate Q(theta).
RationalPoly minimal_poly_combination(const std::vector<Rational>& a, const RationalPoly& theta_poly);
RationalPoly minimal_poly_combination(const std::vector<Rational>& a, std::uint64_t q);

/// F(X) = Res_Y(G(Y), H(X - Y)), the polynomial whose roots are pi' + theta'
/// over all conjugates. Computed by evaluating at X = 0..ef and interpolating.
RationalPoly compose_minimal_poly(const RationalPoly& g, const RationalPoly& h);

/// theta^i pi^j for 0 <= i < f, 0 <= j < e, flat index j*f + i.
class OrthogonalBasis {
 public:
  /// elements[k] is theta^i pi^j at k = j*f + i; zeta_powers row k holds the
  /// coordinates of zeta^k over the elements.
  OrthogonalBasis(int f, int e, std::vector<FieldElement> elements, RationalMatrix zeta_powers);
  static OrthogonalBasis from_generators(const FieldElement& theta, const FieldElement& pi, int f,
                                         int e);

  int f() const { return f_; }
  int e() const { return e_; }
  std::size_t size() const { return elements_.size(); }
  const FieldRef& field() const { return elements_.front().field(); }
  std::size_t flat(int i, int j) const { return static_cast<std::size_t>(j * f_ + i); }
  int grade(std::size_t k) const { return static_cast<int>(k) / f_; }
  int position(std::size_t k) const { return static_cast<int>(k) % f_; }
  const FieldElement& element(std::size_t k) const { return elements_.at(k); }
  const FieldElement& element(int i, int j) const { return elements_.at(flat(i, j)); }
  const std::vector<FieldElement>& elements() const { return elements_; }
  /// j/e for the element at flat index k.
  Valuation valuation_of(std::size_t k) const;
  const RationalMatrix& zeta_powers() const { return zeta_powers_; }

  /// Coefficients c_k with t = sum c_k * element(k).
  std::vector<Rational> coordinates(const FieldElement& t) const;
  FieldElement combine(const std::vector<Rational>& coords) const;
  /// min over nonzero c_k of v_p(c_k) + grade/e.
  Valuation coordinate_valuation(const std::vector<Rational>& coords) const;
  VectorFamily family() const;

 private:
  int f_;
  int e_;
  std::vector<FieldElement> elements_;
  RationalMatrix zeta_powers_;
};

/// Expresses theta and pi in powers of zeta, where zeta = pi + sum a_i theta^i
/// and F is its minimal polynomial. The change of basis is computed inside
/// Q[theta, pi]/(T(theta), G(pi)).
struct GeneratorExpansion {
  FieldElement theta;
  FieldElement pi;
  OrthogonalBasis basis;
};
GeneratorExpansion express_generators(const FieldRef& field, const RationalPoly& theta_poly,
                                      const RationalPoly& eisenstein, const std::vector<Rational>& a);
GeneratorExpansion express_generators(const ConstructionParams& params, const RationalPoly& f);

struct BasisCertificate {
  std::string method;
  bool residue_irreducible = false;  // T irreducible mod p
  bool eisenstein = false;
  bool theta_root = false;
  bool pi_root = false;
  bool zeta_identity = false;
  Valuation theta_valuation = Valuation::infinity();
  Valuation pi_valuation = Valuation::infinity();
  /// Present when the digit enumeration was small enough to run.
  std::optional<GradedReport> enumeration;

  bool valid() const;
};

struct BuildOptions {
  /// Run the digit-vector certifier when each grade needs at most this many
  /// combinations.
  std::uint64_t enumeration_limit = 256;
};

struct ConstructionResult {
  Prime p{2};
  RationalPoly theta_poly;
  RationalPoly eisenstein;
  std::vector<Rational> a;
  RationalPoly h;
  FieldRef field;
  FieldElement theta;
  FieldElement pi;
  OrthogonalBasis basis;
  BasisCertificate certificate;
};

/// Full pipeline for zeta = pi + sum a_i theta^i with theta a root of
/// theta_poly (any monic irreducible with irreducible reduction mod p) and pi
/// a root of the Eisenstein polynomial. Throws ConstructionError with a
/// diagnostic when any step or certificate check fails.
ConstructionResult build_composite(Prime p, const RationalPoly& theta_poly,
                                   const RationalPoly& eisenstein, const std::vector<Rational>& a,
                                   const BuildOptions& options = {});
/// The cyclotomic case theta_poly = Phi_q, after check_construction_params.
ConstructionResult build(const ConstructionParams& params, const BuildOptions& options = {});

}  // namespace padic

#endif  // PADIC_BASIS_BUILDER_HPP_
