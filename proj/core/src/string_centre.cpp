#include "drinfeld/string_centre.hpp"

#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/presentation.hpp"
#include "drinfeld/table1.hpp"

namespace drinfeld::centre {

namespace {

Rational frac(const Rational& r) {
  Rational f(lattice::mod(r.get_num(), r.get_den()), r.get_den());
  f.canonicalize();
  return f;
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const TorusPart* find_torus(const StructuredCentre& sc) {
  for (const auto& p : sc.ambient.parts())
    if (const auto* t = std::get_if<TorusPart>(&p)) return t;
  return nullptr;
}

// Order of the subgroup generated inside T × ∏Z(Gᵢ), without lifting.
std::size_t downstairs_order(const GroupSpec& spec) {
  using Tuple = std::pair<std::vector<Rational>, std::vector<Element>>;
  std::vector<FiniteAbGroup> groups;
  for (const auto& f : spec.simples) groups.push_back(roots::centre_of(f.type).group);
  auto add = [&](const Tuple& a, const Tuple& b) {
    Tuple out = a;
    for (std::size_t i = 0; i < out.first.size(); ++i) out.first[i] = frac(a.first[i] + b.first[i]);
    for (std::size_t i = 0; i < out.second.size(); ++i) out.second[i] = groups[i].add(a.second[i], b.second[i]);
    return out;
  };
  Tuple zero{std::vector<Rational>(spec.torus_rank(), Rational(0)), {}};
  for (const auto& g : groups) zero.second.push_back(g.zero());
  std::vector<Tuple> gens;
  for (const auto& k : spec.kernel) {
    Tuple t{k.torus, {}};
    for (auto& v : t.first) v = frac(v);
    for (std::size_t i = 0; i < k.simples.size(); ++i) t.second.push_back(groups[i].reduce(k.simples[i]));
    gens.push_back(std::move(t));
  }
  std::vector<Tuple> out{zero};
  std::set<Tuple> seen{zero};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Tuple n = add(out[i], g);
      if (seen.insert(n).second) {
        if (out.size() >= 1000000) throw SizeGuardExceeded("kernel subgroup exceeds the enumeration limit");
        out.push_back(std::move(n));
      }
    }
  return out.size();
}

}  // namespace

void GroupSpec::validate() const {
  if (torus) {
    if (torus->J.rows() != torus->J.cols()) throw DomainError("torus.J: matrix must be square");
    if (torus->J.rows() == 0) throw DomainError("torus.rank: must be positive");
  }
  for (std::size_t i = 0; i < simples.size(); ++i) {
    try {
      simples[i].type.validate();
    } catch (const DomainError& e) {
      throw DomainError(at("simples", i) + ".rank: " + e.what());
    }
  }
  for (std::size_t g = 0; g < kernel.size(); ++g) {
    const auto& k = kernel[g];
    if (k.torus.size() != torus_rank())
      throw DomainError(at("kernel", g) + ".torus: expected " + std::to_string(torus_rank()) + " entries");
    if (k.simples.size() != simples.size())
      throw DomainError(at("kernel", g) + ".simples: expected " + std::to_string(simples.size()) + " entries");
    for (std::size_t i = 0; i < simples.size(); ++i) {
      const auto rank = roots::centre_of(simples[i].type).group.rank();
      if (k.simples[i].size() != rank)
        throw DomainError(at(at("kernel", g) + ".simples", i) + ": centre of " + simples[i].type.str() + " has " +
                          std::to_string(rank) + " generators");
    }
  }
}

forms::QForm sc_centre(const roots::SimpleType& t, const Integer& k) {
  const auto z = roots::centre_of(t);
  const std::size_t m = z.group.rank();
  std::vector<QZ> diag(m);
  forms::QZMatrix off(m, m);
  const Rational level(k);
  for (std::size_t a = 0; a < m; ++a) {
    diag[a] = QZ(level / 2 * roots::coweight_norm(t, z.lifts[a]));
    for (std::size_t b = a + 1; b < m; ++b) {
      off(a, b) = QZ(level * roots::coweight_pairing(t, z.lifts[a], z.lifts[b]));
      off(b, a) = off(a, b);
    }
  }
  return forms::QForm(z.group, diag, off);
}

StructuredCentre simple_centre(const roots::SimpleType& t, const Integer& k) {
  CoweightPart part{t, k, roots::centre_of(t), roots::fundamental_coweights(t), roots::coroot_gram(t)};
  return atom_centre(part, 0, 0, 0);
}

StructuredCentre cover_centre(const GroupSpec& spec) {
  std::vector<StructuredCentre> parts;
  if (spec.torus) parts.push_back(torus::torus_pi0(*spec.torus));
  for (const auto& f : spec.simples) parts.push_back(simple_centre(f.type, f.level));
  return product_centre(parts);
}

KernelLift lift_kernel(const GroupSpec& spec, const StructuredCentre& cover, const Integer& bound) {
  spec.validate();
  const TorusPart* t = find_torus(cover);
  const auto& model = cover.ambient;
  KernelLift out;
  for (std::size_t g = 0; g < spec.kernel.size(); ++g) {
    const auto& k = spec.kernel[g];
    CompactElement c = model.compact_zero();
    std::size_t pre = 0;
    if (t != nullptr) {
      for (const auto& v : k.torus)
        if (v.get_den() > bound)
          throw DomainError(at("kernel", g) + ".torus: denominator exceeds the bound " + bound.get_str());
      // θ = Σ ξⱼ·Veⱼ; coimage directions must come from Λ_im via τ⁻¹.
      const auto xi = to_rational(t->V_inv).apply(k.torus);
      for (std::size_t a = 0; a < t->kernel_rank(); ++a) c.t_ker[a] = frac(xi[t->coimage_rank() + a]);
      for (std::size_t j = 0; j < t->coimage_rank(); ++j) {
        const Rational y = xi[j] * Rational(t->smith.diagonal(j));
        if (y.get_den() != 1)
          throw StructuralError(at("kernel", g) + ".torus: component is not in the image of the compact part");
      }
      for (std::size_t a = 0; a < t->finite_index.size(); ++a) {
        const std::size_t j = t->finite_index[a];
        const Integer d = t->smith.diagonal(j);
        c.pre[a] = lattice::mod(Rational(xi[j] * Rational(d)).get_num(), d);
      }
      pre = t->finite_index.size();

      // The lift must forget back to θ.
      const auto p = model.compact_point(c);
      for (std::size_t i = 0; i < t->rank(); ++i)
        if (Rational(p.real[i] - k.torus[i]).get_den() != 1)
          throw StructuralError(at("kernel", g) + ".torus: lift does not recover the torus element");
    }
    for (std::size_t i = 0; i < spec.simples.size(); ++i) {
      const auto group = roots::centre_of(spec.simples[i].type).group;
      const Element e = group.reduce(k.simples[i]);
      for (const auto& v : e) c.pre[pre++] = v;
    }
    out.generators.push_back(model.compact_add(c, model.compact_zero()));
  }
  out.elements = model.compact_subgroup(out.generators);
  if (out.elements.size() != downstairs_order(spec))
    throw StructuralError("kernel lift is not injective");
  return out;
}

bool level_descends(const StructuredCentre& cover, const KernelLift& lift) {
  for (const auto& e : lift.elements)
    if (!cover.evaluate(cover.ambient.compact_point(e)).is_zero()) return false;
  return true;
}

bool level_descends(const GroupSpec& spec) {
  const auto cover = cover_centre(spec);
  return level_descends(cover, lift_kernel(spec, cover));
}

bool PerpData::contains(const StructuredCentre& sc, const AmbientPoint& p) const {
  for (const auto& z : kernel_points)
    if (!sc.ambient.polar(p, z).is_zero()) return false;
  return true;
}

PerpData z_perp(const StructuredCentre& sc, const std::vector<CompactElement>& z) {
  const auto elements = sc.ambient.compact_subgroup(z);
  for (const auto& e : elements)
    if (!sc.evaluate(sc.ambient.compact_point(e)).is_zero())
      throw DomainError("z_perp: the form does not vanish on the subgroup");
  PerpData out;
  out.vector_dim = sc.vector_dim;
  out.discrete_free_rank = sc.discrete_free_rank;
  out.torus_dim = sc.torus_dim;
  for (const auto& g : z) out.kernel_points.push_back(sc.ambient.compact_point(g));
  for (const auto& f : sc.finite.group().elements())
    if (out.contains(sc, sc.finite_point(f))) out.finite_elements.push_back(f);
  return out;
}

LoopGroupReport loopgroup_flags(const GroupSpec& spec) {
  LoopGroupReport r;
  r.semisimple = spec.torus_rank() == 0;
  r.positive_definite = !spec.torus || spec.torus->positive_definite();
  for (const auto& f : spec.simples) {
    if (f.level <= 0) r.positive_definite = false;
    if (f.type.series == roots::Series::E && f.type.rank == 8 && f.level == 2) r.e8_level2 = true;
  }
  r.applicable = r.semisimple && r.positive_definite && !r.e8_level2;
  if (r.e8_level2)
    r.statement = "excluded: E8 at level 2 has an invertible representation of order 2 although Z(E8) is trivial";
  else if (!r.semisimple)
    r.statement = "not applicable (non-semisimple)";
  else if (!r.positive_definite)
    r.statement = "not applicable (level not positive-definite)";
  else
    r.statement = "computed centre equals (Rep^k LG)^x as a braided 2-group";
  return r;
}

CentreResult quotient_centre(const GroupSpec& spec, const Integer& bound) {
  spec.validate();
  CentreResult r;
  for (const auto& f : spec.simples)
    for (const auto& cell : table1::cells(f.type, f.level)) {
      if (!cell.match()) r.table_flags.push_back(cell.flag_text());
      if (!cell.note.empty()) r.table_flags.push_back(cell.type.str() + ": " + cell.note);
    }

  const StructuredCentre cover = cover_centre(spec);
  const KernelLift lift = lift_kernel(spec, cover, bound);
  for (const auto& g : lift.generators) r.kernel_values.push_back(cover.evaluate(cover.ambient.compact_point(g)));
  r.descends = level_descends(cover, lift);
  if (!r.descends) return r;

  std::vector<Element> zf;
  for (const auto& g : lift.generators) zf.push_back(cover.finite_coords(g.pre));
  const auto sub = forms::perp_quotient(cover.finite, zf);

  bool holds = true;
  r.coset_check_ran = forms::coset_invariance_checked(cover.finite, zf, holds);
  if (r.coset_check_ran && !holds) throw StructuralError("q is not constant on cosets of Z");

  StructuredCentre c = cover;
  c.finite = sub.form;
  c.to_finite = sub.coordinates * cover.to_finite;
  c.finite_reps = cover.finite_reps * sub.generators;
  const auto& f = c.ambient.pre_factors();
  for (std::size_t i = 0; i < c.finite_reps.rows(); ++i)
    for (std::size_t j = 0; j < c.finite_reps.cols(); ++j) c.finite_reps(i, j) = lattice::mod(c.finite_reps(i, j), f[i]);

  // Independent check through the ambient evaluator, torus directions included.
  Element e = c.finite.group().zero();
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = 1;
    const auto p = c.finite_point(e);
    const QZ qp = c.evaluate(p);
    if (qp != c.finite.diag()[i]) throw StructuralError("quotient form disagrees with the evaluator");
    for (const auto& z : lift.elements)
      if (c.evaluate(p + c.ambient.compact_point(z)) != qp)
        throw StructuralError("q is not constant on a coset of Z");
    e[i] = 0;
  }

  if (c.is_finite()) r.name = forms::name_form(c.finite);
  r.centre = std::move(c);
  return r;
}

}  // namespace drinfeld::centre
