#pragma once

#include <vector>

#include "drinfeld/qform.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld::forms {

/// A quadratic polynomial law on ℤ^m, Q(x) = Σ xᵢ²·diag[i] + Σ_{i<j} xᵢxⱼ·off[i][j] in ℚ/ℤ.
struct QuadraticLaw {
  std::vector<QZ> diag;
  QZMatrix off;

  std::size_t dim() const { return diag.size(); }
  QZ operator()(std::span<const Integer> x) const;
  QZ polar(std::span<const Integer> x, std::span<const Integer> y) const;
  /// Law in the basis given by the columns of B.
  QuadraticLaw pullback(const IntMatrix& b) const;
};

/// Finite quotient ℤ^m / span(relations) carrying a law that is invariant
/// under the relations.
struct Presentation {
  IntMatrix relations;  // m × r, columns are relations
  QuadraticLaw law;
};

struct PresentedForm {
  QForm form;
  /// Row i sends x ∈ ℤ^m to the i-th invariant-factor coordinate (reduce mod dᵢ).
  IntMatrix coordinates;
  /// Column i is a preimage in ℤ^m of the i-th generator.
  IntMatrix generators;

  Element project(std::span<const Integer> x) const;
};

/// Normalises a presentation to invariant-factor form. Throws DomainError if
/// the quotient is infinite or the law does not descend.
PresentedForm present(const Presentation& p);

/// Z⊥/Z for a subgroup Z of the form's group on which q vanishes.
struct Subquotient {
  QForm form;
  /// Rows act on parent coordinates of elements of Z⊥ (rational because the
  /// map is only defined on Z⊥).
  RatMatrix coordinates;
  /// Column i is a parent element lifting the i-th generator of Z⊥/Z.
  IntMatrix generators;
  Integer perp_order;

  Element project(const FiniteAbGroup& parent, std::span<const Integer> x) const;
};

/// True iff q(z) = 0 for every z in the subgroup generated by `gens`.
bool vanishes_on(const QForm& q, const std::vector<Element>& gens);

/// Throws DomainError when q does not vanish on ⟨gens⟩.
Subquotient perp_quotient(const QForm& q, const std::vector<Element>& gens);

/// Exhaustive check that q(x+z) = q(x) for all x ∈ Z⊥ and z ∈ Z. Returns
/// false without checking when |Z⊥|·|Z| exceeds `budget`.
bool coset_invariance_checked(const QForm& q, const std::vector<Element>& gens, bool& holds,
                              const Integer& budget = Integer(4000000));

}  // namespace drinfeld::forms
