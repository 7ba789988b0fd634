#include "drinfeld/abelian_group.hpp"

#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld {

FiniteAbGroup::FiniteAbGroup(std::vector<Integer> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw DomainError("invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw DomainError("invariant factors must form a divisibility chain");
  }
}

FiniteAbGroup FiniteAbGroup::cyclic(const Integer& n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  if (n == 1) return {};
  return FiniteAbGroup({n});
}

Integer FiniteAbGroup::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

Integer FiniteAbGroup::exponent() const { return factors_.empty() ? Integer(1) : factors_.back(); }

Element FiniteAbGroup::reduce(std::span<const Integer> coords) const {
  if (coords.size() != factors_.size())
    throw DomainError("element has " + std::to_string(coords.size()) + " coordinates, group " +
                      str() + " needs " + std::to_string(factors_.size()));
  Element out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[i] = lattice::mod(coords[i], factors_[i]);
  return out;
}

bool FiniteAbGroup::is_canonical(std::span<const Integer> coords) const {
  if (coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] < 0 || coords[i] >= factors_[i]) return false;
  return true;
}

Element FiniteAbGroup::add(const Element& a, const Element& b) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = a[i] + b[i];
    if (out[i] >= factors_[i]) out[i] -= factors_[i];
  }
  return out;
}

Element FiniteAbGroup::negate(const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = a[i] == 0 ? Integer(0) : factors_[i] - a[i];
  return out;
}

Element FiniteAbGroup::scale(const Integer& n, const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = lattice::mod(n * a[i], factors_[i]);
  return out;
}

Integer FiniteAbGroup::element_order(const Element& a) const {
  Integer o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    o = lattice::lcm(o, factors_[i] / lattice::gcd(a[i], factors_[i]));
  return o;
}

std::vector<Element> FiniteAbGroup::elements(const Integer& limit) const {
  const Integer n = order();
  if (n > limit)
    throw SizeGuardExceeded("group " + str() + " has more than " + limit.get_str() + " elements");
  std::vector<Element> out;
  out.reserve(n.get_ui());
  Element cur = zero();
  for (unsigned long k = 0; k < n.get_ui(); ++k) {
    out.push_back(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::size_t FiniteAbGroup::index_of(const Element& a) const {
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += a[i].get_ui() * stride;
    stride *= factors_[i].get_ui();
  }
  return idx;
}

std::string FiniteAbGroup::str() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "×ℤ/" : "ℤ/") + factors_[i].get_str();
  return s;
}

std::vector<Element> subgroup_elements(const FiniteAbGroup& group, const std::vector<Element>& gens,
                                       const Integer& limit) {
  std::vector<Element> members{group.zero()};
  std::set<Element> seen{group.zero()};
  for (const auto& raw : gens) {
    const Element g = group.reduce(raw);
    // Coset-by-coset closure: members ∪ (members + g) ∪ (members + 2g) ∪ …
    const std::size_t base = members.size();
    Element step = g;
    while (!seen.contains(step)) {
      for (std::size_t i = 0; i < base; ++i) {
        Element e = group.add(members[i], step);
        if (seen.insert(e).second) members.push_back(std::move(e));
      }
      if (Integer(members.size()) > limit)
        throw SizeGuardExceeded("subgroup exceeds " + limit.get_str() + " elements");
      step = group.add(step, g);
    }
  }
  return members;
}

}  // namespace drinfeld
