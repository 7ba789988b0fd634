#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "drinfeld/abelian_group.hpp"
#include "drinfeld/qform.hpp"

namespace drinfeld::oracle {

/// ℚ/ℤ-valued 3-cochain on a finite abelian group, tabulated on element
/// indices (FiniteAbGroup::elements order).
class Cocycle3 {
 public:
  Cocycle3() = default;
  Cocycle3(FiniteAbGroup group, std::vector<QZ> table);
  static Cocycle3 from_function(const FiniteAbGroup& group,
                                const std::function<QZ(const Element&, const Element&, const Element&)>& f);
  static Cocycle3 zero(const FiniteAbGroup& group);

  const FiniteAbGroup& group() const { return group_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Element>& elements() const { return elems_; }
  std::size_t add(std::size_t a, std::size_t b) const { return sum_[a * size() + b]; }

  const QZ& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return table_[(a * size() + b) * size() + c];
  }

  /// dω = 0 at every 4-tuple.
  bool is_cocycle() const;
  /// ω = 0 whenever an argument is the identity.
  bool is_normalised() const;

 private:
  FiniteAbGroup group_;
  std::vector<Element> elems_;
  std::vector<std::size_t> sum_;
  std::vector<QZ> table_;
};

/// ω(a,b,c) = k·a·⌊(b+c)/n⌋/n on ℤ/n with representatives in [0, n).
Cocycle3 std_cocycle(const Integer& n, const Integer& k);

/// θ_g(x,y) = ω(x,g,y) − ω(g,x,y) − ω(x,y,g), indexed x·|H| + y.
std::vector<QZ> slant(const Cocycle3& w, std::size_t g);

/// 2-cocycle condition for a table indexed x·|H| + y.
bool is_two_cocycle(const Cocycle3& w, const std::vector<QZ>& theta);

/// A centre object: g with a half-braiding γ satisfying dγ = θ_g.
struct CentrePiece {
  std::size_t g = 0;
  std::vector<QZ> gamma;
};

struct BruteCentre {
  FiniteAbGroup group;
  forms::QForm form;
  std::vector<CentrePiece> pieces;
  /// Coordinates of each piece in `group`.
  std::vector<Element> coordinates;
};

/// Requires |H| ≤ 64 and cocycle denominators ≤ 10⁴.
BruteCentre brute_centre(const Cocycle3& w);

/// All γ with dγ = θ_g (empty when θ_g is not a coboundary).
std::vector<std::vector<QZ>> half_braidings(const Cocycle3& w, std::size_t g);

struct ExactSequenceReport {
  bool kernel_is_characters = false;
  bool image_is_coboundary_locus = false;
  bool cardinality = false;
  std::size_t kernel_size = 0;
  std::size_t image_size = 0;
  std::size_t pi0_size = 0;

  bool exact() const { return kernel_is_characters && image_is_coboundary_locus && cardinality; }
};

ExactSequenceReport exact_sequence_check(const Cocycle3& w);

/// Every homomorphism H → ℚ/ℤ as a table on element indices.
std::vector<std::vector<QZ>> characters(const FiniteAbGroup& group);

/// Finite abelian group given by a Cayley table, with a function on it.
struct CayleyData {
  std::size_t size = 1;
  std::size_t zero = 0;
  std::function<std::size_t(std::size_t, std::size_t)> add;
  std::vector<QZ> q;
};

/// Invariant-factor form of the group and the quadratic form determined by q.
/// Throws StructuralError if q is not a quadratic form on the table.
forms::QForm cayley_to_form(const CayleyData& data, std::vector<Element>* coordinates = nullptr);

}  // namespace drinfeld::oracle
