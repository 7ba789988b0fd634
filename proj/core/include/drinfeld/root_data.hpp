#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/abelian_group.hpp"
#include "drinfeld/matrix.hpp"

namespace drinfeld::roots {

enum class Series { A, B, C, D, E, F, G };

/// Simple simply-connected compact type, numbered as in Bourbaki's plates.
struct SimpleType {
  Series series = Series::A;
  int rank = 1;

  /// Throws DomainError for combinations such as B1 or E5.
  void validate() const;
  /// "A1", "E7", ...
  std::string str() const;
  static SimpleType parse(std::string_view text);
  static Series parse_series(std::string_view text);

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

char series_letter(Series s);

/// C[i][j] = ⟨αᵢ, αⱼ∨⟩; column j is αⱼ∨ written in fundamental coweights.
IntMatrix cartan_matrix(const SimpleType& t);

/// Basic inner product on simple coroots: symmetric, positive definite, even,
/// with the short coroots of norm 2.
RatMatrix coroot_gram(const SimpleType& t);

/// Columns are ωᵢ in the simple-coroot basis.
RatMatrix fundamental_coweights(const SimpleType& t);

/// Φ∨/Π with the conventional named generators.
struct CentreData {
  FiniteAbGroup group;
  /// 1-based indices i of the fundamental coweights ωᵢ used as generators.
  std::vector<int> labels;
  /// Generator lifts in the simple-coroot basis.
  std::vector<std::vector<Rational>> lifts;

  /// Class of Σ nᵢωᵢ in named-generator coordinates.
  Element class_of(std::span<const Integer> coweight_coords) const;

  IntMatrix cartan;
};

CentreData centre_of(const SimpleType& t);

/// I(w, w) for w in the simple-coroot basis.
Rational coweight_norm(const SimpleType& t, std::span<const Rational> w);
/// I(v, w).
Rational coweight_pairing(const SimpleType& t, std::span<const Rational> v, std::span<const Rational> w);

}  // namespace drinfeld::roots
