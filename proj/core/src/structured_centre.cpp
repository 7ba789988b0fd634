#include "drinfeld/structured_centre.hpp"

#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/presentation.hpp"

namespace drinfeld::centre {

namespace {

Rational frac(const Rational& r) {
  Rational f(lattice::mod(r.get_num(), r.get_den()), r.get_den());
  f.canonicalize();
  return f;
}

template <class T>
Matrix<T> block_diagonal(const std::vector<Matrix<T>>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<T> out(rows, cols, T(0));
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

void reduce_rows(IntMatrix& m, const std::vector<Integer>& factors) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = lattice::mod(m(i, j), factors[i]);
}

}  // namespace

AmbientPoint operator+(const AmbientPoint& a, const AmbientPoint& b) {
  if (a.lattice.size() != b.lattice.size() || a.real.size() != b.real.size())
    throw DomainError("ambient points of different shapes");
  AmbientPoint out = a;
  for (std::size_t i = 0; i < b.lattice.size(); ++i) out.lattice[i] += b.lattice[i];
  for (std::size_t i = 0; i < b.real.size(); ++i) out.real[i] += b.real[i];
  return out;
}

AmbientPoint operator*(const Integer& n, const AmbientPoint& a) {
  AmbientPoint out = a;
  for (auto& v : out.lattice) v *= n;
  for (auto& v : out.real) v *= Rational(n);
  return out;
}

void AmbientModel::add(Part part) {
  offsets_.push_back({lattice_dim_, real_dim_, ker_dim_, pre_factors_.size()});
  if (const auto* t = std::get_if<TorusPart>(&part)) {
    lattice_dim_ += t->rank();
    real_dim_ += t->rank();
    ker_dim_ += t->kernel_rank();
    for (auto j : t->finite_index) pre_factors_.push_back(t->smith.diagonal(j));
  } else {
    const auto& c = std::get<CoweightPart>(part);
    lattice_dim_ += static_cast<std::size_t>(c.type.rank);
    for (const auto& d : c.centre.group.invariant_factors()) pre_factors_.push_back(d);
  }
  parts_.push_back(std::move(part));
}

AmbientPoint AmbientModel::zero() const {
  return {std::vector<Integer>(lattice_dim_, Integer(0)), std::vector<Rational>(real_dim_, Rational(0))};
}

QZ AmbientModel::evaluate(const AmbientPoint& p) const {
  if (p.lattice.size() != lattice_dim_ || p.real.size() != real_dim_)
    throw DomainError("ambient point has the wrong shape");
  Rational total = 0;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const auto& off = offsets_[k];
    if (const auto* t = std::get_if<TorusPart>(&parts_[k])) {
      // q(λ, x) = λ(x) + J(x, x)
      const std::size_t r = t->rank();
      for (std::size_t i = 0; i < r; ++i) {
        const Rational& xi = p.real[off.real + i];
        total += Rational(p.lattice[off.lattice + i]) * xi;
        if (xi == 0) continue;
        for (std::size_t j = 0; j < r; ++j) total += xi * Rational(t->J(i, j)) * p.real[off.real + j];
      }
    } else {
      // q(w) = (k/2)·I(w, w)
      const auto& c = std::get<CoweightPart>(parts_[k]);
      const std::size_t n = static_cast<std::size_t>(c.type.rank);
      std::vector<Rational> coeff(n);
      for (std::size_t i = 0; i < n; ++i) coeff[i] = Rational(p.lattice[off.lattice + i]);
      const auto w = c.coweights.apply(coeff);
      const auto gw = c.gram.apply(w);
      Rational norm = 0;
      for (std::size_t i = 0; i < n; ++i) norm += w[i] * gw[i];
      total += Rational(c.level) * norm / 2;
    }
  }
  return QZ(total);
}

QZ AmbientModel::polar(const AmbientPoint& p, const AmbientPoint& p2) const {
  return evaluate(p + p2) - evaluate(p) - evaluate(p2);
}

AmbientPoint AmbientModel::pre_point(std::span<const Integer> pre) const {
  if (pre.size() != pre_factors_.size()) throw DomainError("pre-finite coordinates have the wrong length");
  AmbientPoint out = zero();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const auto& off = offsets_[k];
    if (const auto* t = std::get_if<TorusPart>(&parts_[k])) {
      // s(λ) = (τ⁻¹λ, λ) with λ = μ·U⁻¹eⱼ and τ⁻¹λ = μ·Veⱼ/dⱼ
      for (std::size_t a = 0; a < t->finite_index.size(); ++a) {
        const Integer& mu = pre[off.pre + a];
        if (mu == 0) continue;
        const std::size_t j = t->finite_index[a];
        const Rational scale = Rational(mu) / Rational(t->smith.diagonal(j));
        for (std::size_t i = 0; i < t->rank(); ++i) {
          out.lattice[off.lattice + i] += mu * t->U_inv(i, j);
          out.real[off.real + i] += scale * Rational(t->smith.V(i, j));
        }
      }
    } else {
      const auto& c = std::get<CoweightPart>(parts_[k]);
      for (std::size_t a = 0; a < c.centre.labels.size(); ++a)
        out.lattice[off.lattice + static_cast<std::size_t>(c.centre.labels[a] - 1)] += pre[off.pre + a];
    }
  }
  return out;
}

AmbientPoint AmbientModel::compact_point(const CompactElement& c) const {
  if (c.t_ker.size() != ker_dim_) throw DomainError("kernel-torus coordinates have the wrong length");
  AmbientPoint out = pre_point(c.pre);
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const auto* t = std::get_if<TorusPart>(&parts_[k]);
    if (t == nullptr) continue;
    const auto& off = offsets_[k];
    for (std::size_t a = 0; a < t->kernel_rank(); ++a) {
      const Rational& angle = c.t_ker[off.ker + a];
      const std::size_t j = t->coimage_rank() + a;
      for (std::size_t i = 0; i < t->rank(); ++i) out.real[off.real + i] += angle * Rational(t->smith.V(i, j));
    }
  }
  return out;
}

CompactElement AmbientModel::compact_zero() const {
  return {std::vector<Rational>(ker_dim_, Rational(0)), std::vector<Integer>(pre_factors_.size(), Integer(0))};
}

CompactElement AmbientModel::compact_add(const CompactElement& a, const CompactElement& b) const {
  CompactElement out = compact_zero();
  for (std::size_t i = 0; i < ker_dim_; ++i) out.t_ker[i] = frac(a.t_ker[i] + b.t_ker[i]);
  for (std::size_t i = 0; i < pre_factors_.size(); ++i) out.pre[i] = lattice::mod(a.pre[i] + b.pre[i], pre_factors_[i]);
  return out;
}

std::vector<CompactElement> AmbientModel::compact_subgroup(const std::vector<CompactElement>& gens,
                                                           const Integer& limit) const {
  std::vector<CompactElement> canon;
  for (const auto& g : gens) {
    CompactElement c = compact_add(g, compact_zero());
    for (const auto& t : c.t_ker)
      if (t.get_den() > limit) throw DomainError("kernel element has unreasonably large order");
    canon.push_back(std::move(c));
  }
  std::vector<CompactElement> out{compact_zero()};
  std::set<CompactElement> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : canon) {
      CompactElement next = compact_add(out[i], g);
      if (seen.insert(next).second) {
        if (Integer(static_cast<unsigned long>(out.size())) >= limit)
          throw SizeGuardExceeded("kernel subgroup exceeds the enumeration limit");
        out.push_back(std::move(next));
      }
    }
  return out;
}

std::vector<Integer> StructuredCentre::finite_pre(std::span<const Integer> element) const {
  const Element e = finite.group().reduce(element);
  std::vector<Integer> pre = finite_reps.apply(e);
  const auto& f = ambient.pre_factors();
  for (std::size_t i = 0; i < pre.size(); ++i) pre[i] = lattice::mod(pre[i], f[i]);
  return pre;
}

AmbientPoint StructuredCentre::finite_point(std::span<const Integer> element) const {
  return ambient.pre_point(finite_pre(element));
}

Element StructuredCentre::finite_coords(std::span<const Integer> pre) const {
  std::vector<Rational> pr(pre.begin(), pre.end());
  const auto img = to_finite.apply(pr);
  std::vector<Integer> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i].get_den() != 1) throw DomainError("point lies outside the finite subgroup");
    out[i] = img[i].get_num();
  }
  return finite.group().reduce(out);
}

StructuredCentre atom_centre(const Part& part, std::size_t vector_dim, std::size_t discrete_free_rank,
                             std::size_t torus_dim) {
  StructuredCentre sc;
  sc.vector_dim = vector_dim;
  sc.discrete_free_rank = discrete_free_rank;
  sc.torus_dim = torus_dim;
  sc.ambient.add(part);
  const auto& f = sc.ambient.pre_factors();
  const std::size_t m = f.size();
  if (m == 0) {
    sc.to_finite = RatMatrix(0, 0);
    sc.finite_reps = IntMatrix(0, 0);
    return sc;
  }
  forms::QuadraticLaw law{std::vector<QZ>(m), forms::QZMatrix(m, m)};
  std::vector<AmbientPoint> unit(m);
  std::vector<Integer> e(m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) {
    e[i] = 1;
    unit[i] = sc.ambient.pre_point(e);
    e[i] = 0;
    law.diag[i] = sc.ambient.evaluate(unit[i]);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      law.off(i, j) = sc.ambient.polar(unit[i], unit[j]);
      law.off(j, i) = law.off(i, j);
    }
  IntMatrix rel(m, m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) rel(i, i) = f[i];
  const auto pres = forms::present({rel, law});
  sc.finite = pres.form;
  sc.to_finite = to_rational(pres.coordinates);
  sc.finite_reps = pres.generators;
  reduce_rows(sc.finite_reps, f);
  return sc;
}

StructuredCentre product_centre(const std::vector<StructuredCentre>& parts) {
  StructuredCentre out;
  std::vector<RatMatrix> maps;
  std::vector<IntMatrix> reps;
  std::vector<QZ> diag;
  std::vector<forms::QZMatrix> offs;
  std::vector<Integer> factors;
  for (const auto& p : parts) {
    out.vector_dim += p.vector_dim;
    out.discrete_free_rank += p.discrete_free_rank;
    out.torus_dim += p.torus_dim;
    for (const auto& part : p.ambient.parts()) out.ambient.add(part);
    const std::size_t pre = p.ambient.pre_factors().size();
    const std::size_t k = p.finite.group().rank();
    maps.push_back(p.to_finite.rows() == k && p.to_finite.cols() == pre ? p.to_finite : RatMatrix(k, pre));
    reps.push_back(p.finite_reps.rows() == pre && p.finite_reps.cols() == k ? p.finite_reps : IntMatrix(pre, k));
    diag.insert(diag.end(), p.finite.diag().begin(), p.finite.diag().end());
    offs.push_back(p.finite.offdiag());
    const auto& inv = p.finite.group().invariant_factors();
    factors.insert(factors.end(), inv.begin(), inv.end());
  }
  const std::size_t m = factors.size();
  if (m == 0) {
    out.to_finite = RatMatrix(0, out.ambient.pre_factors().size());
    out.finite_reps = IntMatrix(out.ambient.pre_factors().size(), 0);
    return out;
  }
  forms::QuadraticLaw law{diag, block_diagonal(offs)};
  IntMatrix rel(m, m, Integer(0));
  for (std::size_t i = 0; i < m; ++i) rel(i, i) = factors[i];
  const auto pres = forms::present({rel, law});
  out.finite = pres.form;
  out.to_finite = to_rational(pres.coordinates) * block_diagonal(maps);
  out.finite_reps = block_diagonal(reps) * pres.generators;
  reduce_rows(out.finite_reps, out.ambient.pre_factors());
  return out;
}

MaxCompact max_compact(const StructuredCentre& sc) { return {sc.torus_dim, sc.finite}; }

}  // namespace drinfeld::centre
