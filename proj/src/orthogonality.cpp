#include "padic/orthogonality.hpp"

#include <map>

namespace padic {

namespace {

Rational fractional_part(const Rational& x) {
  Integer floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return x - Rational(floor_value);
}

}  // namespace

std::optional<std::uint64_t> digit_enumeration_size(Prime p, std::size_t m, std::uint64_t limit) {
  // Count of normalized digit vectors: 1 + p + ... + p^(m-1).
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total += power;
    if (total > limit) return std::nullopt;
    if (i + 1 < m) {
      if (power > limit / p.value()) return std::nullopt;
      power *= p.value();
    }
  }
  return total;
}

EqualNormReport check_orthogonal_equal_norm(std::span<const FieldElement> family,
                                            std::uint64_t limit) {
  if (family.empty()) throw OrthogonalityPreconditionError("empty family");
  const FieldRef& field = family.front().field();
  for (const auto& a : family) {
    if (!a.field()->same_field(*field)) {
      throw OrthogonalityPreconditionError("family members belong to different fields");
    }
  }
  EqualNormReport report;
  report.norm_exponent = elem_valuation(family.front());
  for (const auto& a : family.subspan(1)) {
    if (elem_valuation(a) != report.norm_exponent) {
      throw OrthogonalityPreconditionError(
          "family members have unequal norms; use check_orthogonal_graded");
    }
  }
  if (report.norm_exponent.is_infinite()) {
    throw OrthogonalityPreconditionError("family contains zero");
  }
  const std::size_t m = family.size();
  if (!digit_enumeration_size(field->p(), m, limit)) {
    throw OrthogonalityPreconditionError("digit enumeration exceeds the configured limit");
  }
  const std::uint64_t p = field->p().value();

  // Normalized vectors have zeros before a leading 1 and free digits after it.
  // Visiting the leading position from last to first gives lexicographic order.
  for (std::size_t lead = m; lead-- > 0;) {
    std::uint64_t tail_count = 1;
    for (std::size_t i = lead + 1; i < m; ++i) tail_count *= p;
    for (std::uint64_t t = 0; t < tail_count; ++t) {
      std::vector<std::uint64_t> digits(m, 0);
      digits[lead] = 1;
      std::uint64_t rest = t;
      for (std::size_t pos = m; pos-- > lead + 1;) {
        digits[pos] = rest % p;
        rest /= p;
      }
      FieldElement combo = family[lead];
      for (std::size_t pos = lead + 1; pos < m; ++pos) {
        if (digits[pos]) combo += family[pos] * Rational(static_cast<long>(digits[pos]));
      }
      ++report.combinations_checked;
      if (elem_valuation(combo) != report.norm_exponent) {
        report.orthogonal = false;
        report.counterexample = std::move(digits);
        return report;
      }
    }
  }
  report.orthogonal = true;
  return report;
}

GradedReport check_orthogonal_graded(const VectorFamily& family, std::uint64_t limit) {
  if (family.elements.empty()) throw OrthogonalityPreconditionError("empty family");
  if (!family.grades.empty() && family.grades.size() != family.elements.size()) {
    throw OrthogonalityPreconditionError("grade labels do not match the family size");
  }
  std::map<int, std::vector<FieldElement>> by_grade;
  for (std::size_t i = 0; i < family.elements.size(); ++i) {
    const int grade = family.grades.empty() ? 0 : family.grades[i];
    by_grade[grade].push_back(family.elements[i]);
  }
  const auto e = family.elements.front().field()->ramification();
  GradedReport out;
  out.orthogonal = true;
  std::map<Rational, int> fractional_owner;
  for (const auto& [grade, members] : by_grade) {
    GradeReport gr;
    gr.grade = grade;
    gr.size = members.size();
    try {
      gr.report = check_orthogonal_equal_norm(members, limit);
    } catch (const OrthogonalityPreconditionError& err) {
      throw OrthogonalityPreconditionError("grade " + std::to_string(grade) + ": " + err.what());
    }
    const Rational frac = fractional_part(gr.report.norm_exponent.value());
    if (e && frac != fractional_part(Rational(Integer(grade), Integer(*e)))) {
      throw OrthogonalityPreconditionError(
          "grade " + std::to_string(grade) + " has valuation " + gr.report.norm_exponent.str() +
          ", not congruent to " + std::to_string(grade) + "/" + std::to_string(*e) + " mod 1");
    }
    auto [it, inserted] = fractional_owner.emplace(frac, grade);
    if (!inserted) {
      throw OrthogonalityPreconditionError("grades " + std::to_string(it->second) + " and " +
                                           std::to_string(grade) +
                                           " share a value group coset; merge them into one grade");
    }
    out.orthogonal = out.orthogonal && gr.report.orthogonal;
    out.grades.push_back(std::move(gr));
  }
  return out;
}

bool power_basis_orthogonality(const RationalPoly& f, Prime p) {
  if (!f.is_monic()) throw ArithmeticError("power basis check needs a monic polynomial");
  return is_irreducible_mod_p(reduce_mod_p(f, p));
}

}  // namespace padic
