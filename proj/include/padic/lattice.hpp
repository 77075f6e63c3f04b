#ifndef PADIC_LATTICE_HPP_
#define PADIC_LATTICE_HPP_

#include <optional>
#include <vector>

#include "padic/basis_builder.hpp"
#include "padic/field.hpp"
#include "padic/linalg.hpp"
#include "padic/xof.hpp"

namespace padic {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Z_p-span of Q-linearly independent field elements.
class PadicLattice {
 public:
  /// Throws LatticeError for an empty or dependent generator list.
  explicit PadicLattice(std::vector<FieldElement> generators);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<FieldElement>& generators() const { return generators_; }
  const FieldRef& field() const { return generators_.front().field(); }

  /// The unique rational x with sum x_k g_k = v, if v lies in the Q-span.
  std::optional<std::vector<Rational>> coefficients(const FieldElement& v) const;
  bool contains(const FieldElement& v) const;

 private:
  std::vector<FieldElement> generators_;
  std::vector<std::size_t> pivots_;
  // Inverse of the generator matrix restricted to the pivot columns.
  RationalMatrix pivot_inverse_;
};

bool membership(const FieldElement& v, const PadicLattice& lattice);

/// Sorted flat indices (j*f + i) into an OrthogonalBasis.
struct LatticeIndexSet {
  std::vector<std::size_t> indices;

  std::size_t size() const { return indices.size(); }
  bool contains(std::size_t k) const;
  /// Grades 0 and 1 in full.
  static LatticeIndexSet mandatory(int f);
};

/// Throws LatticeError unless S is sorted, in range and holds grades 0 and 1.
void validate_index_set(const LatticeIndexSet& s, const OrthogonalBasis& basis);

/// The mandatory grades plus m - 2f further indices of grade >= 2 drawn from rng.
LatticeIndexSet choose_index_set(const OrthogonalBasis& basis, std::size_t m, DeterministicRng& rng);

/// The basis elements selected by S, in order.
std::vector<FieldElement> select(const OrthogonalBasis& basis, const LatticeIndexSet& s);

std::vector<Rational> to_orthogonal_coords(const FieldElement& t, const OrthogonalBasis& basis);

struct CvpResult {
  FieldElement v;
  /// Valuation of t - v; infinity when t lies in the span of S.
  Valuation distance;
  std::vector<Rational> coords;
};

/// Projection onto the S coordinates. Throws LatticeError if some orthogonal
/// coordinate of t is not p-integral.
CvpResult cvp_orthogonal(const FieldElement& t, const OrthogonalBasis& basis,
                         const LatticeIndexSet& s);

/// beta_i = sum_k A_ik alpha_k over the elements selected by S. A must be an
/// integer matrix with p-unit determinant whose rows each have a p-unit entry
/// in a grade-0 column; otherwise LatticeError.
std::vector<FieldElement> mix_basis(const OrthogonalBasis& basis, const LatticeIndexSet& s,
                                    const RationalMatrix& a);

/// Unit lower times unit upper triangular, entries in [0, bound), resampled
/// until the grade-0 row condition holds.
RationalMatrix sample_mixing_matrix(const OrthogonalBasis& basis, const LatticeIndexSet& s,
                                    DeterministicRng& rng, std::uint64_t bound = 4);

}  // namespace padic

#endif  // PADIC_LATTICE_HPP_
