#ifndef PADIC_ORTHOGONALITY_HPP_
#define PADIC_ORTHOGONALITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padic/field.hpp"

namespace padic {

class OrthogonalityPreconditionError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Field elements sharing one field, optionally labelled with grades j (for
/// families shaped s_i * pi^j). An empty grade list means a single grade.
struct VectorFamily {
  std::vector<FieldElement> elements;
  std::vector<int> grades;
};

struct EqualNormReport {
  bool orthogonal = false;
  /// Common valuation of the family members.
  Valuation norm_exponent = Valuation::infinity();
  /// First digit vector in {0..p-1}^m whose combination is strictly shorter.
  std::optional<std::vector<std::uint64_t>> counterexample;
  std::uint64_t combinations_checked = 0;
};

struct GradeReport {
  int grade = 0;
  std::size_t size = 0;
  EqualNormReport report;
};

struct GradedReport {
  bool orthogonal = false;
  std::vector<GradeReport> grades;
};

/// Upper bound on digit vectors a single equal-norm check will enumerate.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 1ULL << 22;

/// Number of digit vectors check_orthogonal_equal_norm visits for m vectors:
/// (p^m - 1)/(p - 1), or nullopt past the limit.
std::optional<std::uint64_t> digit_enumeration_size(Prime p, std::size_t m,
                                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// Orthogonality of an equal-norm family by enumerating digit vectors. A family
/// of common norm lambda is orthogonal iff every combination with digits in
/// {0..p-1}, not all zero, still has norm lambda. Digit vectors are visited in
/// lexicographic order with the first nonzero digit normalized to 1, since
/// unit multiples do not change the norm. A linearly dependent family always
/// yields a counterexample.
///
/// Throws OrthogonalityPreconditionError on an empty family, mixed fields,
/// unequal norms (use check_orthogonal_graded), a zero member, or an
/// enumeration larger than `limit`.
EqualNormReport check_orthogonal_equal_norm(std::span<const FieldElement> family,
                                            std::uint64_t limit = kDefaultEnumerationLimit);

/// Per-grade equal-norm checks plus disjointness of the grades' value groups
/// (distinct fractional parts of the valuations). When the field's e is known,
/// the members of grade j must have valuation congruent to j/e mod 1.
GradedReport check_orthogonal_graded(const VectorFamily& family,
                                     std::uint64_t limit = kDefaultEnumerationLimit);

/// Whether 1, theta, ..., theta^(n-1) is orthogonal for theta a root of F, by
/// irreducibility of F mod p. Requires F monic with p-integral coefficients.
bool power_basis_orthogonality(const RationalPoly& f, Prime p);

}  // namespace padic

#endif  // PADIC_ORTHOGONALITY_HPP_
