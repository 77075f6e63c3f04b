#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "padic/lattice.hpp"

using namespace padic;
using fixtures::r;

namespace {

const ConstructionResult& golden() {
  static const ConstructionResult built = build(fixtures::p2q5e3());
  return built;
}

RationalMatrix example_mixing_matrix() {
  RationalMatrix a = RationalMatrix::identity(8);
  for (std::size_t row = 0; row < 8; ++row) a(row, 0) = r(1);
  a(1, 2) = r(1);
  return a;
}

}  // namespace

TEST(PadicLattice, MembershipBasics) {
  const auto& built = golden();
  const FieldElement one = FieldElement::one(built.field);
  const PadicLattice lattice({one, built.pi});
  EXPECT_TRUE(lattice.contains(one * r(3) + built.pi * r(5)));
  EXPECT_TRUE(lattice.contains(one * r(1, 3)));  // 3 is a unit at 2
  EXPECT_FALSE(lattice.contains(one * r(1, 2)));
  EXPECT_FALSE(lattice.contains(built.theta));
  EXPECT_TRUE(membership(FieldElement::zero(built.field), lattice));
  const auto coeffs = lattice.coefficients(one * r(2) + built.pi * r(1, 5));
  ASSERT_TRUE(coeffs.has_value());
  EXPECT_EQ(*coeffs, (std::vector<Rational>{r(2), r(1, 5)}));
  EXPECT_FALSE(lattice.coefficients(built.theta).has_value());
}

TEST(PadicLattice, RejectsDegenerateGenerators) {
  const auto& built = golden();
  EXPECT_THROW(PadicLattice(std::vector<FieldElement>{}), LatticeError);
  EXPECT_THROW(PadicLattice({built.pi, built.pi * r(2)}), LatticeError);
}

TEST(PadicLattice, MembershipAgainstDirectSolve) {
  const auto& built = golden();
  DeterministicRng rng(Bytes{1}, "lattice-membership");
  const std::vector<FieldElement> gens = select(built.basis, LatticeIndexSet::mandatory(4));
  const PadicLattice lattice(gens);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> c(gens.size());
    for (auto& x : c) x = r(static_cast<long>(rng.below(9)) - 4, 1 + 2 * static_cast<long>(rng.below(2)));
    const bool halve = rng.below(2) == 0;
    if (halve) c[rng.below(c.size())] *= r(1, 2);
    FieldElement v = FieldElement::zero(built.field);
    for (std::size_t k = 0; k < gens.size(); ++k) v += gens[k] * c[k];
    // Oracle: the generator coefficients are the orthogonal coordinates.
    const auto coords = built.basis.coordinates(v);
    bool expected = true;
    for (const auto& x : coords) expected = expected && is_p_integral(x, Prime(2));
    EXPECT_EQ(lattice.contains(v), expected);
  }
}

TEST(LatticeIndexSet, MandatoryAndValidation) {
  const auto& basis = golden().basis;
  const auto s = LatticeIndexSet::mandatory(4);
  EXPECT_EQ(s.indices, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_NO_THROW(validate_index_set(s, basis));
  EXPECT_THROW(validate_index_set(LatticeIndexSet{{0, 1, 2, 3, 4, 5, 6}}, basis), LatticeError);
  EXPECT_THROW(validate_index_set(LatticeIndexSet{{0, 1, 2, 3, 4, 5, 6, 7, 12}}, basis), LatticeError);
  EXPECT_THROW(validate_index_set(LatticeIndexSet{{0, 1, 2, 3, 4, 5, 7, 6}}, basis), LatticeError);
  EXPECT_TRUE(s.contains(7));
  EXPECT_FALSE(s.contains(8));
}

TEST(LatticeIndexSet, ChooseIsDeterministicAndValid) {
  const auto& basis = golden().basis;
  for (std::size_t m = 8; m <= 12; ++m) {
    DeterministicRng a(Bytes{4}, "padic/keygen");
    DeterministicRng b(Bytes{4}, "padic/keygen");
    const auto s = choose_index_set(basis, m, a);
    EXPECT_EQ(s.indices, choose_index_set(basis, m, b).indices);
    EXPECT_EQ(s.size(), m);
    EXPECT_NO_THROW(validate_index_set(s, basis));
  }
  DeterministicRng rng(Bytes{4}, "padic/keygen");
  EXPECT_THROW(choose_index_set(basis, 7, rng), LatticeError);
  EXPECT_THROW(choose_index_set(basis, 13, rng), LatticeError);
}

TEST(Cvp, ZetaCubeExample) {
  const auto& built = golden();
  const auto& basis = built.basis;
  const FieldElement t = pow(FieldElement::generator(built.field), 3);
  const auto s = LatticeIndexSet::mandatory(4);
  const CvpResult result = cvp_orthogonal(t, basis, s);
  EXPECT_EQ(result.distance, Valuation(r(2, 3)));
  EXPECT_EQ(elem_valuation(t - result.v), Valuation(r(2, 3)));
  const PadicLattice lattice(select(basis, s));
  EXPECT_TRUE(lattice.contains(result.v));

  // The hand-picked closest vector theta^3 + pi*theta^2 is just as close.
  const FieldElement v = pow(built.theta, 3) + built.pi * pow(built.theta, 2);
  EXPECT_TRUE(lattice.contains(v));
  EXPECT_EQ(elem_valuation(t - v), Valuation(r(2, 3)));
  EXPECT_EQ(compare_abs(elem_valuation(t - v), Valuation(0)), std::strong_ordering::less);
}

TEST(Cvp, ProjectionIsOptimal) {
  // No lattice vector beats the projection: exhaustive over small digit
  // vectors added to the optimum.
  const auto& built = golden();
  const auto& basis = built.basis;
  const auto s = LatticeIndexSet::mandatory(4);
  const auto gens = select(basis, s);
  DeterministicRng rng(Bytes{2}, "cvp-optimal");
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c(12);
    for (auto& x : c) x = r(static_cast<long>(rng.below(7)) - 3);
    const FieldElement t = basis.combine(c);
    const CvpResult result = cvp_orthogonal(t, basis, s);
    EXPECT_EQ(result.distance, elem_valuation(t - result.v));
    for (int probe = 0; probe < 40; ++probe) {
      FieldElement w = result.v;
      for (const auto& g : gens) w += g * r(static_cast<long>(rng.below(4)));
      EXPECT_LE(elem_valuation(t - w), result.distance);
    }
  }
}

TEST(Cvp, RejectsNonIntegralTarget) {
  const auto& built = golden();
  const FieldElement t = FieldElement::scalar(built.field, r(1, 2));
  EXPECT_THROW(cvp_orthogonal(t, built.basis, LatticeIndexSet::mandatory(4)), LatticeError);
}

TEST(MixBasis, ExampleMatrix) {
  const auto& built = golden();
  const auto s = LatticeIndexSet::mandatory(4);
  const auto betas = mix_basis(built.basis, s, example_mixing_matrix());
  ASSERT_EQ(betas.size(), 8u);
  EXPECT_EQ(betas[0], FieldElement::one(built.field));
  EXPECT_EQ(betas[1], FieldElement::one(built.field) + built.theta + pow(built.theta, 2));
  EXPECT_EQ(betas[4], FieldElement::one(built.field) + built.pi);
  for (const auto& b : betas) EXPECT_EQ(elem_valuation(b), Valuation(0));
  const PadicLattice mixed(betas);
  const PadicLattice plain(select(built.basis, s));
  for (const auto& g : plain.generators()) EXPECT_TRUE(mixed.contains(g));
  for (const auto& g : mixed.generators()) EXPECT_TRUE(plain.contains(g));
}

TEST(MixBasis, RejectsBadMatrices) {
  const auto& built = golden();
  const auto s = LatticeIndexSet::mandatory(4);
  RationalMatrix a = example_mixing_matrix();
  a(3, 3) = r(2);  // det becomes even
  EXPECT_THROW(mix_basis(built.basis, s, a), LatticeError);
  a = RationalMatrix::identity(8);
  EXPECT_THROW(mix_basis(built.basis, s, a), LatticeError);  // pi has no grade-0 unit
  a = example_mixing_matrix();
  a(2, 2) = r(1, 3);
  EXPECT_THROW(mix_basis(built.basis, s, a), LatticeError);
  EXPECT_THROW(mix_basis(built.basis, s, RationalMatrix::identity(7)), LatticeError);
}

TEST(MixBasis, SampledMatricesAreAccepted) {
  const auto& built = golden();
  for (std::size_t m = 8; m <= 11; ++m) {
    DeterministicRng rng(Bytes{static_cast<std::uint8_t>(m)}, "padic/keygen");
    const auto s = choose_index_set(built.basis, m, rng);
    const RationalMatrix a = sample_mixing_matrix(built.basis, s, rng);
    EXPECT_EQ(valuation(determinant(a), Prime(2)), Valuation(0));
    const auto betas = mix_basis(built.basis, s, a);
    for (const auto& b : betas) EXPECT_EQ(elem_valuation(b), Valuation(0));
  }
}
