#include "padic/lattice.hpp"

#include <algorithm>

namespace padic {

namespace {

std::string mixing_problem(const OrthogonalBasis& basis, const LatticeIndexSet& s,
                           const RationalMatrix& a) {
  const std::size_t m = s.size();
  if (a.rows() != m || a.cols() != m) return "A must be " + std::to_string(m) + "x" + std::to_string(m);
  const Prime p = basis.field()->p();
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!a(r, c).is_integer()) return "A has a non-integer entry at (" + std::to_string(r) + "," + std::to_string(c) + ")";
    }
  }
  if (!is_p_integral(determinant(a), p) || valuation(determinant(a), p) != Valuation(0)) {
    return "det(A) is not a p-unit";
  }
  for (std::size_t r = 0; r < m; ++r) {
    bool found = false;
    for (std::size_t c = 0; c < m && !found; ++c) {
      found = basis.grade(s.indices[c]) == 0 && valuation(a(r, c), p) == Valuation(0);
    }
    if (!found) return "row " + std::to_string(r) + " of A has no p-unit entry in a grade-0 column";
  }
  return {};
}

}  // namespace

PadicLattice::PadicLattice(std::vector<FieldElement> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw LatticeError("lattice needs at least one generator");
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : generators_) {
    if (!g.field()->same_field(*field())) throw LatticeError("generators from different fields");
    rows.push_back(g.coords());
  }
  const RationalMatrix gm = RationalMatrix::from_rows(rows);
  pivots_ = pivot_columns(gm);
  if (pivots_.size() != generators_.size()) throw LatticeError("generators are linearly dependent");
  const std::size_t m = pivots_.size();
  RationalMatrix block(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) block(r, c) = gm(r, pivots_[c]);
  }
  pivot_inverse_ = inverse(block);
}

std::optional<std::vector<Rational>> PadicLattice::coefficients(const FieldElement& v) const {
  if (!v.field()->same_field(*field())) return std::nullopt;
  std::vector<Rational> target;
  for (auto c : pivots_) target.push_back(v.coords()[c]);
  // x^T B = v_P^T where B is the pivot block, so x^T = v_P^T B^{-1}.
  std::vector<Rational> x = multiply(target, pivot_inverse_);
  FieldElement back = FieldElement::zero(field());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) back += generators_[k] * x[k];
  }
  if (!(back == v)) return std::nullopt;
  return x;
}

bool PadicLattice::contains(const FieldElement& v) const {
  const auto x = coefficients(v);
  if (!x) return false;
  const Prime p = field()->p();
  return std::all_of(x->begin(), x->end(), [&](const Rational& c) { return is_p_integral(c, p); });
}

bool membership(const FieldElement& v, const PadicLattice& lattice) { return lattice.contains(v); }

bool LatticeIndexSet::contains(std::size_t k) const {
  return std::binary_search(indices.begin(), indices.end(), k);
}

LatticeIndexSet LatticeIndexSet::mandatory(int f) {
  LatticeIndexSet s;
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * f); ++k) s.indices.push_back(k);
  return s;
}

void validate_index_set(const LatticeIndexSet& s, const OrthogonalBasis& basis) {
  if (!std::is_sorted(s.indices.begin(), s.indices.end()) ||
      std::adjacent_find(s.indices.begin(), s.indices.end()) != s.indices.end()) {
    throw LatticeError("index set must be strictly increasing");
  }
  if (!s.indices.empty() && s.indices.back() >= basis.size()) {
    throw LatticeError("index " + std::to_string(s.indices.back()) + " is outside the basis");
  }
  const std::size_t need = std::min<std::size_t>(2 * basis.f(), basis.size());
  for (std::size_t k = 0; k < need; ++k) {
    if (!s.contains(k)) {
      throw LatticeError("index set misses theta^" + std::to_string(basis.position(k)) + " pi^" +
                         std::to_string(basis.grade(k)));
    }
  }
}

LatticeIndexSet choose_index_set(const OrthogonalBasis& basis, std::size_t m, DeterministicRng& rng) {
  const std::size_t base = 2 * static_cast<std::size_t>(basis.f());
  if (m < base || m > basis.size()) {
    throw LatticeError("rank m = " + std::to_string(m) + " must lie in [" + std::to_string(base) +
                       ", " + std::to_string(basis.size()) + "]");
  }
  LatticeIndexSet s = LatticeIndexSet::mandatory(basis.f());
  std::vector<std::size_t> pool;
  for (std::size_t k = base; k < basis.size(); ++k) pool.push_back(k);
  // Partial Fisher-Yates with the deterministic stream.
  for (std::size_t k = 0; k < m - base; ++k) {
    const std::size_t pick = k + rng.below(static_cast<std::uint64_t>(pool.size() - k));
    std::swap(pool[k], pool[pick]);
    s.indices.push_back(pool[k]);
  }
  std::sort(s.indices.begin(), s.indices.end());
  return s;
}

std::vector<FieldElement> select(const OrthogonalBasis& basis, const LatticeIndexSet& s) {
  std::vector<FieldElement> out;
  for (auto k : s.indices) out.push_back(basis.element(k));
  return out;
}

std::vector<Rational> to_orthogonal_coords(const FieldElement& t, const OrthogonalBasis& basis) {
  return basis.coordinates(t);
}

CvpResult cvp_orthogonal(const FieldElement& t, const OrthogonalBasis& basis,
                         const LatticeIndexSet& s) {
  std::vector<Rational> coords = basis.coordinates(t);
  const Prime p = basis.field()->p();
  std::vector<Rational> kept(coords.size());
  Valuation distance = Valuation::infinity();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!is_p_integral(coords[k], p)) {
      throw LatticeError("orthogonal coordinate " + std::to_string(k) + " of the target is not p-integral");
    }
    if (s.contains(k)) {
      kept[k] = coords[k];
    } else if (!coords[k].is_zero()) {
      distance = std::min(distance, valuation(coords[k], p) + basis.valuation_of(k));
    }
  }
  return CvpResult{basis.combine(kept), distance, std::move(kept)};
}

std::vector<FieldElement> mix_basis(const OrthogonalBasis& basis, const LatticeIndexSet& s,
                                    const RationalMatrix& a) {
  validate_index_set(s, basis);
  if (const std::string problem = mixing_problem(basis, s, a); !problem.empty()) {
    throw LatticeError(problem);
  }
  const std::vector<FieldElement> alphas = select(basis, s);
  std::vector<FieldElement> betas;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    FieldElement b = FieldElement::zero(basis.field());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) b += alphas[c] * a(r, c);
    }
    betas.push_back(std::move(b));
  }
  return betas;
}

RationalMatrix sample_mixing_matrix(const OrthogonalBasis& basis, const LatticeIndexSet& s,
                                    DeterministicRng& rng, std::uint64_t bound) {
  const std::size_t m = s.size();
  for (int attempt = 0; attempt < 256; ++attempt) {
    RationalMatrix lower = RationalMatrix::identity(m);
    RationalMatrix upper = RationalMatrix::identity(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < r; ++c) lower(r, c) = Rational(static_cast<long>(rng.below(bound)));
      for (std::size_t c = r + 1; c < m; ++c) upper(r, c) = Rational(static_cast<long>(rng.below(bound)));
    }
    RationalMatrix a = lower * upper;
    if (mixing_problem(basis, s, a).empty()) return a;
  }
  throw LatticeError("could not sample a mixing matrix satisfying the row condition");
}

}  // namespace padic
