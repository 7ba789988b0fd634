#pragma once

#include "drinfeld/structured_centre.hpp"

namespace drinfeld::torus {

/// Level of a categorical torus: J with I = −(J + Jᵀ).
struct TorusLevel {
  IntMatrix J;

  std::size_t rank() const { return J.rows(); }
  IntMatrix form() const;
  bool positive_definite() const;
};

/// A point (λ, x) of Λ ⊕ 𝔱.
struct TorusPoint {
  std::vector<Integer> lambda;
  std::vector<Rational> x;
};

inline const Integer kDefaultDenominatorBound{1000000};

/// Builds the torus part (SNF splitting of τ) for use in larger models.
centre::TorusPart torus_part(const TorusLevel& tl);

/// π₀ of the centre of T_J with its finite part Λ_im/Π_coim.
centre::StructuredCentre torus_pi0(const TorusLevel& tl);

/// Exponent of the braiding β_{p,p′} = λ(x′) + J(x′, x) mod 1. Rational
/// coordinates must have denominators at most `bound`.
QZ torus_braiding(const TorusLevel& tl, const TorusPoint& p, const TorusPoint& p2,
                  const Integer& bound = kDefaultDenominatorBound);

/// q(λ, x) = λ(x) + J(x, x) mod 1.
QZ torus_q(const TorusLevel& tl, const TorusPoint& p, const Integer& bound = kDefaultDenominatorBound);

/// Image (τπ, π) of a cocharacter.
TorusPoint pi_translate(const TorusLevel& tl, std::span<const Integer> pi);

}  // namespace drinfeld::torus
