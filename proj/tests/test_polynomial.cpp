#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "padic/polynomial.hpp"
#include "padic/xof.hpp"

using namespace padic;
using fixtures::r;
using fixtures::to_q;

namespace {

RationalPoly random_poly(DeterministicRng& rng, int degree, long range, bool monic) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) {
    const long num = static_cast<long>(rng.below(2 * range + 1)) - range;
    const long den = 1 + static_cast<long>(rng.below(3));
    c.push_back(r(num, den));
  }
  if (monic || c.back().is_zero()) c.back() = r(1);
  return RationalPoly(std::move(c));
}

PrimeFieldPoly from_code(std::uint64_t code, int degree, Prime p) {
  std::vector<std::uint64_t> c(degree + 1);
  for (int i = 0; i < degree; ++i) {
    c[i] = code % p.value();
    code /= p.value();
  }
  c[degree] = 1;
  return PrimeFieldPoly(p, c);
}

}  // namespace

TEST(RationalPoly, ArithmeticExamples) {
  const RationalPoly x = RationalPoly::x();
  const RationalPoly one = RationalPoly::constant(r(1));
  EXPECT_EQ((x + one) * (x - one), (RationalPoly{r(-1), r(0), r(1)}));
  auto [q, rem] = divmod(RationalPoly{r(0), r(0), r(1)}, x);
  EXPECT_EQ(q, x);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(compose(RationalPoly{r(0), r(0), r(1)}, x + one), (RationalPoly{r(1), r(2), r(1)}));
}

TEST(RationalPoly, ParseAndPrint) {
  const RationalPoly f = RationalPoly::parse("1,-1/2,0,3");
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.str(), "1,-1/2,0,3");
  EXPECT_EQ(f.pretty(), "3*X^3 - 1/2*X + 1");
  EXPECT_EQ(RationalPoly::parse("0,0").degree(), -1);
  EXPECT_EQ(RationalPoly().str(), "0");
  EXPECT_THROW(RationalPoly::parse("1,,2"), ArithmeticError);
}

TEST(RationalPoly, DivmodIdentity) {
  DeterministicRng rng(Bytes{1}, "poly-divmod");
  for (int trial = 0; trial < 100; ++trial) {
    const RationalPoly a = random_poly(rng, static_cast<int>(rng.below(7)), 9, false);
    const RationalPoly b = random_poly(rng, 1 + static_cast<int>(rng.below(4)), 9, false);
    auto [q, rem] = divmod(a, b);
    EXPECT_EQ(q * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
  EXPECT_THROW(divmod(RationalPoly::x(), RationalPoly()), ArithmeticError);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(RationalPoly{r(-3), r(1)}, RationalPoly{r(1), r(0), r(1)}), r(10));
  EXPECT_EQ(resultant(RationalPoly{r(1), r(0), r(1)}, RationalPoly{r(-2), r(0), r(1)}), r(9));
  EXPECT_EQ(resultant(RationalPoly{r(1), r(0), r(1)}, RationalPoly{r(1), r(0), r(1)}), r(0));
}

TEST(Resultant, MatchesSylvesterDeterminant) {
  DeterministicRng rng(Bytes{2}, "poly-resultant");
  for (int trial = 0; trial < 150; ++trial) {
    const int da = 1 + static_cast<int>(rng.below(6));
    const int db = 1 + static_cast<int>(rng.below(6));
    const RationalPoly a = random_poly(rng, da, 12, trial % 3 == 0);
    const RationalPoly b = random_poly(rng, db, 12, trial % 5 == 0);
    const Rational expected(oracle::sylvester_resultant(to_q(a), to_q(b)));
    EXPECT_EQ(resultant(a, b), expected) << a.str() << " | " << b.str();
  }
}

TEST(Resultant, CommonFactorGivesZero) {
  DeterministicRng rng(Bytes{3}, "poly-common");
  for (int trial = 0; trial < 20; ++trial) {
    const RationalPoly c = random_poly(rng, 1 + static_cast<int>(rng.below(2)), 5, false);
    const RationalPoly a = c * random_poly(rng, 2, 5, false);
    const RationalPoly b = c * random_poly(rng, 3, 5, false);
    EXPECT_EQ(resultant(a, b), r(0));
  }
}

TEST(ReduceModP, Examples) {
  const Prime two(2);
  EXPECT_EQ(reduce_mod_p(RationalPoly{r(1), r(0), r(1)}, two), PrimeFieldPoly(two, {1, 0, 1}));
  EXPECT_EQ(reduce_mod_p(RationalPoly{r(-2), r(0), r(0), r(1)}, two), PrimeFieldPoly(two, {0, 0, 0, 1}));
  EXPECT_THROW(reduce_mod_p(RationalPoly{r(0), r(1, 2)}, two), ArithmeticError);
  // Denominators prime to p are inverted mod p.
  EXPECT_EQ(reduce_mod_p(RationalPoly{r(1, 3), r(1)}, Prime(5)), PrimeFieldPoly(Prime(5), {2, 1}));
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible_mod_p(PrimeFieldPoly(Prime(3), {1, 0, 1})));
  EXPECT_FALSE(is_irreducible_mod_p(PrimeFieldPoly(Prime(2), {1, 0, 1})));
  EXPECT_TRUE(is_irreducible_mod_p(PrimeFieldPoly(Prime(2), {1, 1, 1, 1, 1})));
}

TEST(Irreducible, MatchesTrialDivisionExhaustively) {
  for (std::uint64_t pv : {2ul, 3ul, 5ul}) {
    const Prime p(pv);
    const int max_degree = pv == 2 ? 8 : (pv == 3 ? 5 : 4);
    for (int degree = 1; degree <= max_degree; ++degree) {
      std::uint64_t count = 1;
      for (int i = 0; i < degree; ++i) count *= pv;
      for (std::uint64_t code = 0; code < count; ++code) {
        const PrimeFieldPoly f = from_code(code, degree, p);
        EXPECT_EQ(is_irreducible_mod_p(f), oracle::brute_force_irreducible(f.coefficients(), pv))
            << f.pretty() << " mod " << pv;
      }
    }
  }
}

TEST(Factor, ProductAndIrreducibleFactors) {
  DeterministicRng rng(Bytes{4}, "poly-factor");
  for (std::uint64_t pv : {2ul, 3ul, 5ul, 7ul}) {
    const Prime p(pv);
    for (int trial = 0; trial < 40; ++trial) {
      const int degree = 1 + static_cast<int>(rng.below(9));
      const PrimeFieldPoly f = from_code(rng.below(1u << 20), degree, p);
      PrimeFieldPoly product(p, {1});
      for (const auto& fac : factor_mod_p(f)) {
        EXPECT_TRUE(oracle::brute_force_irreducible(fac.factor.coefficients(), pv));
        EXPECT_EQ(fac.factor.leading(), 1u);
        for (int k = 0; k < fac.multiplicity; ++k) product = product * fac.factor;
      }
      EXPECT_EQ(product, f.monic()) << f.pretty();
    }
  }
}

TEST(Factor, RepeatedFactor) {
  const auto factors = factor_mod_p(PrimeFieldPoly(Prime(2), {1, 0, 1}));
  ASSERT_EQ(factors.size(), 1u);
  EXPECT_EQ(factors[0].factor, PrimeFieldPoly(Prime(2), {1, 1}));
  EXPECT_EQ(factors[0].multiplicity, 2);
}

TEST(Eisenstein, Examples) {
  const Prime two(2);
  EXPECT_TRUE(eisenstein_check(RationalPoly{r(-2), r(0), r(0), r(1)}, two));
  EXPECT_FALSE(eisenstein_check(RationalPoly{r(-4), r(0), r(0), r(1)}, two));
  EXPECT_FALSE(eisenstein_check(RationalPoly{r(2), r(1), r(1)}, two));
  EXPECT_TRUE(eisenstein_check(RationalPoly{r(3), r(6), r(1)}, Prime(3)));
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic_poly(5), (RationalPoly{r(1), r(1), r(1), r(1), r(1)}));
  EXPECT_EQ(cyclotomic_poly(3), (RationalPoly{r(1), r(1), r(1)}));
  EXPECT_EQ(cyclotomic_poly(2), (RationalPoly{r(1), r(1)}));
}

TEST(Cyclotomic, CosetsAndPattern) {
  EXPECT_EQ(cyclotomic_coset(1, 5, Prime(2)), (std::vector<std::uint64_t>{1, 2, 4, 3}));
  EXPECT_EQ(cyclotomic_coset(0, 9, Prime(2)), (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(cyclotomic_coset(1, 7, Prime(2)), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(factor_degree_pattern(5, Prime(2)), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(factor_degree_pattern(7, Prime(2)), (std::vector<std::uint64_t>{1, 3, 3}));
  EXPECT_EQ(factor_degree_pattern(3, Prime(2)), (std::vector<std::uint64_t>{1, 2}));
}

TEST(Cyclotomic, PatternMatchesFactorization) {
  // X^n - 1 over F_p factors with degrees given by the cosets.
  for (std::uint64_t pv : {2ul, 3ul, 5ul}) {
    for (std::uint64_t n : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul}) {
      if (n % pv == 0) continue;
      std::vector<std::uint64_t> c(n + 1);
      c[0] = pv - 1;
      c[n] = 1;
      std::vector<std::uint64_t> degrees;
      for (const auto& fac : factor_mod_p(PrimeFieldPoly(Prime(pv), c))) {
        EXPECT_EQ(fac.multiplicity, 1);
        degrees.push_back(static_cast<std::uint64_t>(fac.factor.degree()));
      }
      auto pattern = factor_degree_pattern(n, Prime(pv));
      std::sort(degrees.begin(), degrees.end());
      std::sort(pattern.begin(), pattern.end());
      EXPECT_EQ(degrees, pattern) << "n=" << n << " p=" << pv;
    }
  }
}

TEST(MultiplicativeOrder, Examples) {
  EXPECT_EQ(multiplicative_order(2, 5), 4u);
  EXPECT_EQ(multiplicative_order(1, 11), 1u);
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(multiplicative_order(3, 7), 6u);
}
