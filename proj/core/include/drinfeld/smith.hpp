#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "drinfeld/matrix.hpp"

namespace drinfeld {

class FiniteAbGroup;

namespace lattice {

/// U·M·V = D with U, V unimodular and D diagonal, d₁ | d₂ | … with the
/// nonzero entries positive and leading.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  Integer diagonal(std::size_t i) const { return i < D.rows() && i < D.cols() ? D(i, i) : Integer(0); }
};

SmithForm snf(const IntMatrix& m);

/// Checks every post-condition of snf against the input; used by tests and,
/// in builds without NDEBUG, after every call.
bool verify_smith(const IntMatrix& m, const SmithForm& s);

/// Image of an ambient vector in coker(M) ≅ finite ⊕ ℤ^free_rank.
struct CokernelElement {
  std::vector<Integer> finite;
  std::vector<Integer> free;

  bool is_zero() const;
  friend bool operator==(const CokernelElement&, const CokernelElement&) = default;
};

/// coker(ℤ^cols → ℤ^ambient) for the column span of M.
class Cokernel {
 public:
  Cokernel(const IntMatrix& m, std::size_t ambient_rank);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  FiniteAbGroup finite() const;

  /// Surjective homomorphism ℤ^ambient → finite ⊕ ℤ^free_rank whose kernel is the column span.
  CokernelElement project(std::span<const Integer> v) const;

  /// Ambient vectors mapping to the standard generators of the finite part.
  std::vector<std::vector<Integer>> finite_generator_preimages() const;

  const SmithForm& smith() const { return smith_; }

 private:
  SmithForm smith_;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> finite_index_;  // rows of U feeding finite coordinates
  std::vector<Integer> factors_;
  std::size_t free_rank_ = 0;
};

/// Basis (as columns) of {v ∈ ℤⁿ : k·v ∈ span(columns of L) for some k ≥ 1}.
IntMatrix saturate(const IntMatrix& l);

/// Basis (as columns) of {x ∈ ℤ^cols : M·x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// True iff v is an integer combination of the columns of M.
bool in_column_span(const IntMatrix& m, std::span<const Integer> v);

/// Basis (as columns, n of them) of the full-rank lattice spanned by the
/// columns of L ⊂ ℤⁿ. Throws DomainError when the span is not full rank.
IntMatrix lattice_basis(const IntMatrix& l);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Representative of a mod m in [0, |m|).
Integer mod(const Integer& a, const Integer& m);

}  // namespace lattice
}  // namespace drinfeld
