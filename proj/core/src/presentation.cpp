#include "drinfeld/presentation.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld::forms {

using lattice::lcm;

QZ QuadraticLaw::operator()(std::span<const Integer> x) const {
  if (x.size() != diag.size()) throw DomainError("law evaluated at a vector of the wrong length");
  QZ acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    acc += Integer(x[i] * x[i]) * diag[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) acc += Integer(x[i] * x[j]) * off(i, j);
  }
  return acc;
}

QZ QuadraticLaw::polar(std::span<const Integer> x, std::span<const Integer> y) const {
  std::vector<Integer> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  return (*this)(s) - (*this)(x) - (*this)(y);
}

QuadraticLaw QuadraticLaw::pullback(const IntMatrix& b) const {
  const std::size_t n = b.cols();
  QuadraticLaw out{std::vector<QZ>(n), QZMatrix(n, n)};
  std::vector<std::vector<Integer>> cols(n);
  for (std::size_t k = 0; k < n; ++k) cols[k] = b.col(k);
  for (std::size_t k = 0; k < n; ++k) {
    out.diag[k] = (*this)(cols[k]);
    for (std::size_t l = k + 1; l < n; ++l) {
      out.off(k, l) = polar(cols[k], cols[l]);
      out.off(l, k) = out.off(k, l);
    }
  }
  return out;
}

Element PresentedForm::project(std::span<const Integer> x) const {
  return form.group().reduce(coordinates.apply(x));
}

PresentedForm present(const Presentation& p) {
  const std::size_t m = p.law.dim();
  if (p.relations.rows() != m && !(p.relations.cols() == 0))
    throw DomainError("relations do not match the law's dimension");

  std::vector<Integer> e(m, Integer(0));
  for (std::size_t c = 0; c < p.relations.cols(); ++c) {
    const auto r = p.relations.col(c);
    if (!p.law(r).is_zero()) throw DomainError("law does not vanish on a relation");
    for (std::size_t i = 0; i < m; ++i) {
      e[i] = 1;
      if (!p.law.polar(e, r).is_zero()) throw DomainError("law is not invariant under a relation");
      e[i] = 0;
    }
  }

  const IntMatrix rel = p.relations.cols() == 0 ? IntMatrix(m, 0) : p.relations;
  const lattice::Cokernel coker(rel, m);
  if (coker.free_rank() != 0) throw DomainError("presented group is infinite");

  const auto group = coker.finite();
  const auto preimages = coker.finite_generator_preimages();
  const std::size_t k = preimages.size();
  IntMatrix gens(m, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < m; ++i) gens(i, j) = preimages[j][i];

  const QuadraticLaw pulled = p.law.pullback(gens);
  QForm form(group, pulled.diag, pulled.off);

  IntMatrix coords(k, m);
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = 1;
    const auto img = coker.project(e);
    for (std::size_t j = 0; j < k; ++j) coords(j, i) = img.finite[j];
    e[i] = 0;
  }
  return {std::move(form), std::move(coords), std::move(gens)};
}

Element Subquotient::project(const FiniteAbGroup& parent, std::span<const Integer> x) const {
  const Element canon = parent.reduce(x);
  std::vector<Rational> xr(canon.begin(), canon.end());
  const auto img = coordinates.apply(xr);
  std::vector<Integer> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i].get_den() != 1) throw DomainError("element is not in the orthogonal complement");
    out[i] = img[i].get_num();
  }
  return form.group().reduce(out);
}

bool vanishes_on(const QForm& q, const std::vector<Element>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!q(gens[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!q.sigma(gens[i], gens[j]).is_zero()) return false;
  }
  return true;
}

Subquotient perp_quotient(const QForm& q, const std::vector<Element>& gens) {
  const auto& g = q.group();
  const std::size_t m = g.rank();
  const auto& d = g.invariant_factors();
  for (const auto& z : gens)
    if (!g.is_canonical(z)) throw DomainError("subgroup generator is not a canonical element");
  if (!vanishes_on(q, gens)) throw DomainError("form does not vanish on the subgroup");

  if (m == 0) return {QForm(), RatMatrix(0, 0), IntMatrix(0, 0), Integer(1)};

  // Z⊥ pulled back to ℤ^m: x with σ(x, z_j) ∈ ℤ for every generator.
  const std::size_t r = gens.size();
  std::vector<std::vector<QZ>> pair(r, std::vector<QZ>(m));
  Integer den = 1;
  Element e = g.zero();
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      e[i] = 1;
      pair[j][i] = q.sigma(e, gens[j]);
      e[i] = 0;
      den = lcm(den, pair[j][i].denominator());
    }
  IntMatrix system(r, m + r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < m; ++i)
      system(j, i) = pair[j][i].numerator() * (den / pair[j][i].denominator());
    system(j, m + j) = den;
  }
  IntMatrix perp_gens;
  if (r == 0) {
    perp_gens = IntMatrix::identity(m);
  } else {
    const IntMatrix kernel = lattice::integer_kernel(system);
    perp_gens = kernel.row_block(0, m);
  }
  // Dℤ^m lies in the solution set already; adding it keeps the span full rank.
  IntMatrix with_torsion(m, perp_gens.cols() + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < perp_gens.cols(); ++c) with_torsion(i, c) = perp_gens(i, c);
    with_torsion(i, perp_gens.cols() + i) = d[i];
  }
  const IntMatrix basis = lattice::lattice_basis(with_torsion);
  const RatMatrix basis_inv = inverse(to_rational(basis));

  // Relations inside Z⊥: Z itself and Dℤ^m, in the Z⊥ basis.
  IntMatrix rel(m, r + m);
  auto push = [&](std::size_t c, const std::vector<Integer>& v) {
    std::vector<Rational> vr(v.begin(), v.end());
    const auto y = basis_inv.apply(vr);
    for (std::size_t i = 0; i < m; ++i) {
      if (y[i].get_den() != 1) throw StructuralError("subgroup is not contained in its orthogonal complement");
      rel(i, c) = y[i].get_num();
    }
  };
  for (std::size_t j = 0; j < r; ++j) push(j, gens[j]);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Integer> v(m, Integer(0));
    v[i] = d[i];
    push(r + i, v);
  }

  const QuadraticLaw parent{q.diag(), q.offdiag()};
  const PresentedForm pres = present({rel, parent.pullback(basis)});

  Subquotient out;
  out.form = pres.form;
  out.coordinates = to_rational(pres.coordinates) * basis_inv;
  out.generators = basis * pres.generators;
  out.perp_order = g.order() / abs(determinant(basis));
  return out;
}

bool coset_invariance_checked(const QForm& q, const std::vector<Element>& gens, bool& holds,
                              const Integer& budget) {
  const auto& g = q.group();
  if (g.order() > kEnumerationLimit) return false;
  const auto zs = subgroup_elements(g, gens);
  std::vector<Element> perp;
  for (const auto& x : g.elements()) {
    bool in = true;
    for (const auto& z : gens)
      if (!q.sigma(x, z).is_zero()) {
        in = false;
        break;
      }
    if (in) perp.push_back(x);
  }
  if (Integer(static_cast<unsigned long>(perp.size())) * Integer(static_cast<unsigned long>(zs.size())) > budget)
    return false;
  holds = true;
  for (const auto& x : perp) {
    const QZ qx = q(x);
    for (const auto& z : zs)
      if (q(g.add(x, z)) != qx) {
        holds = false;
        return true;
      }
  }
  return true;
}

}  // namespace drinfeld::forms
