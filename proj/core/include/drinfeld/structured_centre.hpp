#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "drinfeld/qform.hpp"
#include "drinfeld/root_data.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld::centre {

/// A point of the ambient group in which π₀ is computed: integer coordinates
/// (characters, coweights) and rational coordinates (Lie algebra of the torus).
struct AmbientPoint {
  std::vector<Integer> lattice;
  std::vector<Rational> real;

  friend AmbientPoint operator+(const AmbientPoint& a, const AmbientPoint& b);
  friend AmbientPoint operator*(const Integer& n, const AmbientPoint& a);
  friend bool operator==(const AmbientPoint&, const AmbientPoint&) = default;
};

/// Categorical torus T_J. Ambient coordinates: λ ∈ Λ = ℤʳ (lattice), x ∈ 𝔱 = ℚʳ (real).
struct TorusPart {
  IntMatrix J;
  IntMatrix I;  // −(J + Jᵀ), the map τ: Π → Λ
  lattice::SmithForm smith;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::vector<std::size_t> finite_index;  // diagonal positions with dⱼ > 1

  std::size_t rank() const { return J.rows(); }
  std::size_t coimage_rank() const { return smith.rank; }
  std::size_t kernel_rank() const { return rank() - smith.rank; }
};

/// Simple simply-connected factor at level k. Ambient coordinates: a coweight
/// in fundamental-coweight coordinates (lattice).
struct CoweightPart {
  roots::SimpleType type;
  Integer level;
  roots::CentreData centre;
  RatMatrix coweights;
  RatMatrix gram;
};

using Part = std::variant<TorusPart, CoweightPart>;

/// Compact element: T_ker angles in [0,1) plus pre-finite coordinates.
struct CompactElement {
  std::vector<Rational> t_ker;
  std::vector<Integer> pre;

  friend bool operator==(const CompactElement&, const CompactElement&) = default;
  friend bool operator<(const CompactElement& a, const CompactElement& b) {
    if (a.t_ker != b.t_ker) return a.t_ker < b.t_ker;
    return a.pre < b.pre;
  }
};

/// Concatenation of parts. "Pre-finite" coordinates list, part by part, the
/// cyclic summands of each part's finite group before normalisation.
class AmbientModel {
 public:
  void add(Part part);

  const std::vector<Part>& parts() const { return parts_; }
  std::size_t lattice_dim() const { return lattice_dim_; }
  std::size_t real_dim() const { return real_dim_; }
  std::size_t ker_dim() const { return ker_dim_; }
  const std::vector<Integer>& pre_factors() const { return pre_factors_; }

  AmbientPoint zero() const;
  /// Evaluation of the quadratic form at an ambient point, exact in ℚ/ℤ.
  QZ evaluate(const AmbientPoint& p) const;
  /// σ(p, p′) by polarisation of evaluate.
  QZ polar(const AmbientPoint& p, const AmbientPoint& p2) const;

  AmbientPoint pre_point(std::span<const Integer> pre) const;
  AmbientPoint compact_point(const CompactElement& c) const;

  CompactElement compact_zero() const;
  CompactElement compact_add(const CompactElement& a, const CompactElement& b) const;
  std::vector<CompactElement> compact_subgroup(const std::vector<CompactElement>& gens,
                                               const Integer& limit = kEnumerationLimit) const;

 private:
  struct Offsets {
    std::size_t lattice, real, ker, pre;
  };
  std::vector<Part> parts_;
  std::vector<Offsets> offsets_;
  std::size_t lattice_dim_ = 0, real_dim_ = 0, ker_dim_ = 0;
  std::vector<Integer> pre_factors_;
};

/// π₀ of a Drinfel'd centre: ℝ^vector_dim ⊕ ℤ^discrete_free_rank ⊕ T^torus_dim ⊕ finite,
/// with the quadratic form on the finite part and an exact evaluator on the ambient group.
struct StructuredCentre {
  std::size_t vector_dim = 0;
  std::size_t discrete_free_rank = 0;
  std::size_t torus_dim = 0;
  forms::QForm finite;
  AmbientModel ambient;
  /// Pre-finite coordinates → finite coordinates (defined on the relevant subgroup).
  RatMatrix to_finite;
  /// Columns: pre-finite coordinates of the finite generators.
  IntMatrix finite_reps;

  bool is_finite() const { return vector_dim == 0 && discrete_free_rank == 0 && torus_dim == 0; }
  QZ evaluate(const AmbientPoint& p) const { return ambient.evaluate(p); }
  AmbientPoint finite_point(std::span<const Integer> element) const;
  std::vector<Integer> finite_pre(std::span<const Integer> element) const;
  /// Finite coordinates of pre-finite coordinates; throws DomainError outside the domain.
  Element finite_coords(std::span<const Integer> pre) const;
};

/// Centre of a single part, its finite group normalised from the part's own cyclic summands.
StructuredCentre atom_centre(const Part& part, std::size_t vector_dim, std::size_t discrete_free_rank,
                             std::size_t torus_dim);

/// Direct sum; the form on a tuple is the sum of component values.
StructuredCentre product_centre(const std::vector<StructuredCentre>& parts);

/// The compact part: torus dimension and the finite form (the T_ker summand
/// carries the zero form and pairs trivially with the finite part).
struct MaxCompact {
  std::size_t torus_dim = 0;
  forms::QForm finite;
};

MaxCompact max_compact(const StructuredCentre& sc);

}  // namespace drinfeld::centre
