#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/qform.hpp"
#include "drinfeld/root_data.hpp"
#include "drinfeld/structured_centre.hpp"
#include "drinfeld/torus_centre.hpp"

namespace drinfeld::centre {

struct SimpleFactor {
  roots::SimpleType type;
  Integer level;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Element of Z(T × ∏Gᵢ): a torus angle vector mod 1 and, per simple factor,
/// coordinates on that factor's named centre generators.
struct KernelGenerator {
  std::vector<Rational> torus;
  std::vector<Element> simples;

  friend bool operator==(const KernelGenerator&, const KernelGenerator&) = default;
};

/// (T × ∏Gᵢ)/Z with level (J, {kᵢ}).
struct GroupSpec {
  std::optional<torus::TorusLevel> torus;
  std::vector<SimpleFactor> simples;
  std::vector<KernelGenerator> kernel;

  std::size_t torus_rank() const { return torus ? torus->rank() : 0; }
  /// Throws DomainError naming the offending field.
  void validate() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    const bool same_torus = a.torus.has_value() == b.torus.has_value() && (!a.torus || a.torus->J == b.torus->J);
    return same_torus && a.simples == b.simples && a.kernel == b.kernel;
  }
};

/// Finite centre of a simply-connected simple factor at level k, with
/// q(z) = (k/2)·I(z̄, z̄) on named generators and σ = k·I(z̄ᵢ, z̄ⱼ).
forms::QForm sc_centre(const roots::SimpleType& t, const Integer& k);

/// Centre of a single simple factor as a structured centre (coweight evaluator).
StructuredCentre simple_centre(const roots::SimpleType& t, const Integer& k);

/// π₀ of the centre of the simply-connected cover T × ∏Gᵢ.
StructuredCentre cover_centre(const GroupSpec& spec);

/// The kernel inside the compact part of the cover's centre.
struct KernelLift {
  std::vector<CompactElement> generators;
  std::vector<CompactElement> elements;
};

KernelLift lift_kernel(const GroupSpec& spec, const StructuredCentre& cover,
                       const Integer& bound = torus::kDefaultDenominatorBound);

/// q vanishes on every element of the lifted kernel.
bool level_descends(const StructuredCentre& cover, const KernelLift& lift);
bool level_descends(const GroupSpec& spec);

/// Elements braiding trivially with Z.
struct PerpData {
  std::size_t vector_dim = 0;
  std::size_t discrete_free_rank = 0;
  std::size_t torus_dim = 0;
  /// Z⊥ ∩ finite part, in finite coordinates.
  std::vector<Element> finite_elements;
  std::vector<AmbientPoint> kernel_points;

  bool contains(const StructuredCentre& sc, const AmbientPoint& p) const;
};

/// Requires q to vanish on Z; throws DomainError otherwise.
PerpData z_perp(const StructuredCentre& sc, const std::vector<CompactElement>& z);

struct LoopGroupReport {
  bool semisimple = false;
  bool positive_definite = false;
  bool e8_level2 = false;
  bool applicable = false;
  std::string statement;
};

LoopGroupReport loopgroup_flags(const GroupSpec& spec);

struct CentreResult {
  bool descends = false;
  std::optional<StructuredCentre> centre;
  std::optional<forms::BraidedName> name;
  std::vector<std::string> table_flags;
  /// q on the lifted kernel generators (all zero iff descends).
  std::vector<QZ> kernel_values;
  /// Whether the exhaustive coset check on the finite part ran.
  bool coset_check_ran = false;
};

CentreResult quotient_centre(const GroupSpec& spec, const Integer& bound = torus::kDefaultDenominatorBound);

}  // namespace drinfeld::centre
