#ifndef PADIC_TESTS_FIXTURES_HPP_
#define PADIC_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "oracles.hpp"
#include "padic/basis_builder.hpp"
#include "padic/field.hpp"

namespace fixtures {

using padic::Integer;
using padic::Rational;
using padic::RationalPoly;

inline Rational r(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

inline Rational big(const char* num, const char* den = "1") {
  return Rational(Integer(num), Integer(den));
}

// p = 2, q = 5, e = 3, G = X^3 - 2, zeta = theta + pi.
inline padic::ConstructionParams p2q5e3() {
  padic::ConstructionParams params;
  params.p = padic::Prime(2);
  params.q = 5;
  params.e = 3;
  params.a = {r(0), r(1), r(0), r(0)};
  params.eisenstein = RationalPoly{r(-2), r(0), r(0), r(1)};
  params.allow_custom_a = true;
  return params;
}

inline RationalPoly p2q5e3_f() {
  return RationalPoly{r(11), r(51), r(60), r(-14), r(123), r(156), r(55),
                      r(0),  r(-3), r(2),  r(6),   r(3),   r(1)};
}

inline const char* kExpansionDenominator = "1629140188769";

// Coordinates of pi over zeta^0..zeta^11.
inline std::vector<Rational> p2q5e3_pi() {
  const char* nums[] = {"2351295575158", "8861128375100", "-5592239718810", "4679498203520",
                        "12015453327570", "5239564032114", "159622956145",  "-299407958370",
                        "-73747682730",  "436088923470",  "235034311248",  "95167453215"};
  std::vector<Rational> out;
  for (const char* n : nums) out.push_back(big(n, kExpansionDenominator));
  return out;
}

inline std::vector<Rational> p2q5e3_theta() {
  const char* nums[] = {"-2351295575158", "-7231988186331", "5592239718810", "-4679498203520",
                        "-12015453327570", "-5239564032114", "-159622956145", "299407958370",
                        "73747682730",     "-436088923470",  "-235034311248", "-95167453215"};
  std::vector<Rational> out;
  for (const char* n : nums) out.push_back(big(n, kExpansionDenominator));
  return out;
}

inline oracle::Vec to_q(const std::vector<Rational>& xs) {
  oracle::Vec out;
  for (const auto& x : xs) out.push_back(x.get());
  return out;
}

inline oracle::Vec to_q(const RationalPoly& f) { return to_q(f.coefficients()); }

inline padic::Valuation oracle_valuation(const padic::FieldElement& x) {
  const auto v = oracle::valuation(to_q(x.coords()), to_q(x.field()->defining()),
                                   x.field()->p().value());
  if (v.second == 0) return padic::Valuation::infinity();
  return padic::Valuation(Rational(Integer(v.first), Integer(v.second)));
}

}  // namespace fixtures

#endif  // PADIC_TESTS_FIXTURES_HPP_
