#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "drinfeld/matrix.hpp"

namespace drinfeld {

/// Element of a FiniteAbGroup: one coordinate per invariant factor, each in [0, dᵢ).
using Element = std::vector<Integer>;

/// Default budget for routines that enumerate every element.
inline const Integer kEnumerationLimit{1000000};

/// Finite abelian group ℤ/d₁ × … × ℤ/d_m in invariant-factor form
/// (dᵢ ≥ 2, dᵢ | dᵢ₊₁). The empty factor list is the trivial group.
class FiniteAbGroup {
 public:
  FiniteAbGroup() = default;
  explicit FiniteAbGroup(std::vector<Integer> invariant_factors);

  /// ℤ/n, or the trivial group for n == 1.
  static FiniteAbGroup cyclic(const Integer& n);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  Integer order() const;
  Integer exponent() const;

  Element zero() const { return Element(factors_.size(), Integer(0)); }
  /// Canonical representative of an integer tuple; throws DomainError on a length mismatch.
  Element reduce(std::span<const Integer> coords) const;
  bool is_canonical(std::span<const Integer> coords) const;

  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Integer& n, const Element& a) const;
  Integer element_order(const Element& a) const;

  /// Every element in mixed-radix order (first coordinate fastest).
  /// Throws SizeGuardExceeded when the order exceeds `limit`.
  std::vector<Element> elements(const Integer& limit = kEnumerationLimit) const;
  std::size_t index_of(const Element& a) const;

  /// "ℤ/2×ℤ/4", or "0" for the trivial group.
  std::string str() const;

  friend bool operator==(const FiniteAbGroup&, const FiniteAbGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// All elements of the subgroup generated by `gens`, identity first.
std::vector<Element> subgroup_elements(const FiniteAbGroup& group, const std::vector<Element>& gens,
                                       const Integer& limit = kEnumerationLimit);

}  // namespace drinfeld
