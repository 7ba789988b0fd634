#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "drinfeld/abelian_group.hpp"
#include "drinfeld/qz.hpp"

namespace drinfeld::forms {

using QZMatrix = Matrix<QZ>;

/// ℚ/ℤ-valued quadratic form on a finite abelian group, stored on the
/// invariant-factor generators gᵢ:
///
///   q(Σ aᵢgᵢ) = Σ aᵢ²·diag[i] + Σ_{i<j} aᵢaⱼ·offdiag[i][j]
///
/// The constructor only checks shapes and symmetry; whether the law defines a
/// genuine quadratic form is answered by is_quadratic().
class QForm {
 public:
  QForm() = default;
  QForm(FiniteAbGroup group, std::vector<QZ> diag, QZMatrix offdiag);
  /// Form with vanishing off-diagonal values.
  QForm(FiniteAbGroup group, std::vector<QZ> diag);

  /// (ℤ/n, q(1) = value).
  static QForm cyclic(const Integer& n, const QZ& value);

  const FiniteAbGroup& group() const { return group_; }
  const std::vector<QZ>& diag() const { return diag_; }
  const QZMatrix& offdiag() const { return offdiag_; }

  /// Evaluation law at an integer tuple (any representative).
  QZ operator()(std::span<const Integer> x) const;

  /// σ(a, b) = q(a+b) − q(a) − q(b).
  QZ sigma(std::span<const Integer> a, std::span<const Integer> b) const;

  /// Exact algebraic criterion for the law to descend to a quadratic form:
  /// dᵢ²·diag[i] = 0, 2dᵢ·diag[i] = 0 and dᵢ·offdiag[i][j] = 0.
  bool satisfies_generator_conditions() const;

  friend bool operator==(const QForm&, const QForm&) = default;

 private:
  FiniteAbGroup group_;
  std::vector<QZ> diag_;
  QZMatrix offdiag_;
};

/// q(x) for an element of q.group(); throws DomainError on a shape mismatch.
QZ eval_q(const QForm& q, std::span<const Integer> x);

/// σ(gᵢ, gⱼ) for all generator pairs, diagonal included.
QZMatrix associated_bilinear(const QForm& q);

/// Full table σ(a, b) indexed by FiniteAbGroup::index_of.
std::vector<std::vector<QZ>> bilinear_table(const QForm& q, const Integer& limit = Integer(4096));

/// Decides whether q is a quadratic form: q(na) = n²q(a) and σ bilinear.
/// Throws SizeGuardExceeded for groups with more than 10⁶ elements.
bool is_quadratic(const QForm& q);

/// All quadratic forms on ℤ/n; n of them for odd n and 2n for even n.
std::vector<QForm> enumerate_qforms(const Integer& n);

/// Number of bilinear forms ℤ/n × ℤ/n → ℚ/ℤ, by enumeration.
Integer bilinear_count(const Integer& n);

/// |H³_soft(Bℤ/n, U(1))| = |Quad(ℤ/n)| / |Bilin(ℤ/n)|.
Integer soft_h3_order(const Integer& n);

enum class NameTag { Vec, VecZ2, sVec, Semi, SemiBar, Structured };

struct BraidedName {
  NameTag tag = NameTag::Vec;
  std::string descriptor;  // only for Structured

  std::string str() const;
  friend bool operator==(const BraidedName&, const BraidedName&) = default;
};

std::string to_string(NameTag tag);
BraidedName name_form(const QForm& q);

/// True iff some group isomorphism φ satisfies q_b∘φ = q_a. Brute force;
/// throws SizeGuardExceeded when either group has more than 10⁴ elements.
bool iso_forms(const QForm& a, const QForm& b);

/// Elements x with σ(x, ·) ≡ 0.
std::vector<Element> radical(const QForm& q);
bool is_nondegenerate(const QForm& q);

struct GaussSum {
  std::complex<double> value;      // advisory only
  std::map<QZ, Integer> values;    // exact multiset of q-values
  bool nondegenerate = false;
};

GaussSum gauss_sum(const QForm& q);

/// Multiset of q-values over all elements.
std::map<QZ, Integer> value_multiset(const QForm& q);

}  // namespace drinfeld::forms
