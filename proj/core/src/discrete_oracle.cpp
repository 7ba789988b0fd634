#include "drinfeld/discrete_oracle.hpp"

#include <map>
#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/presentation.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld::oracle {

namespace {

constexpr std::size_t kMaxOrder = 64;
const Integer kMaxDenominator{10000};

Integer common_denominator(const std::vector<QZ>& values) {
  Integer d = 1;
  for (const auto& v : values) d = lattice::lcm(d, v.denominator());
  return d;
}

std::size_t generator_index(const FiniteAbGroup& g, std::size_t i) {
  Element e = g.zero();
  e[i] = 1;
  return g.index_of(e);
}

// Solves dγ = θ_g over ℤ/D with D = (cocycle denominator)·exponent, which
// bounds the denominators of every solution. Only the equations with y a
// generator are imposed: the cocycle identity propagates them to all y.
class HalfBraidingSolver {
 public:
  explicit HalfBraidingSolver(const Cocycle3& w) : w_(w) {
    const std::size_t n = w.size();
    den_ = common_denominator_of(w) * w.group().exponent();
    for (std::size_t i = 0; i < w.group().rank(); ++i) gens_.push_back(generator_index(w.group(), i));
    IntMatrix a(n * gens_.size(), n, Integer(0));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        const std::size_t row = x * gens_.size() + k;
        a(row, x) += 1;
        a(row, gens_[k]) += 1;
        a(row, w.add(x, gens_[k])) -= 1;
      }
    smith_ = lattice::snf(a);
  }

  std::vector<std::vector<QZ>> solve(std::size_t g) const {
    const std::size_t n = w_.size();
    if (n == 1) return {{QZ()}};
    const auto theta = slant(w_, g);
    std::vector<Integer> b(n * gens_.size());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        const QZ& t = theta[x * n + gens_[k]];
        b[x * gens_.size() + k] = t.numerator() * (den_ / t.denominator());
      }
    const auto c = smith_.U.apply(b);
    for (std::size_t i = smith_.rank; i < c.size(); ++i)
      if (lattice::mod(c[i], den_) != 0) return {};

    // Per coordinate of V⁻¹u: the residues solving sᵢ·wᵢ ≡ cᵢ (mod D).
    std::vector<std::vector<Integer>> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= smith_.rank) {
        throw StructuralError("half-braiding system is not of full rank");
      }
      const Integer s = smith_.diagonal(i);
      const Integer h = lattice::gcd(s, den_);
      if (lattice::mod(c[i], h) != 0) return {};
      const Integer m = den_ / h;
      Integer inv = 0;
      const Integer s_red = lattice::mod(s / h, m);
      if (m == 1) {
        inv = 0;
      } else if (mpz_invert(inv.get_mpz_t(), s_red.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw StructuralError("modular inverse failed");
      }
      const Integer base = lattice::mod((c[i] / h) * inv, m);
      for (Integer t = 0; t < h; ++t) choices[i].push_back(base + t * m);
    }
    Integer total = 1;
    for (const auto& ch : choices) total *= static_cast<unsigned long>(ch.size());
    if (total > kEnumerationLimit) throw SizeGuardExceeded("too many candidate half-braidings");

    std::vector<std::vector<QZ>> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      std::vector<Integer> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = choices[i][pick[i]];
      const auto u = smith_.V.apply(v);
      std::vector<QZ> gamma(n);
      for (std::size_t x = 0; x < n; ++x) gamma[x] = qz(u[x], den_);
      if (!satisfies(gamma, theta)) throw StructuralError("half-braiding fails the full hexagon check");
      out.push_back(std::move(gamma));
      std::size_t i = 0;
      while (i < n && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == n) break;
    }
    return out;
  }

  bool satisfies(const std::vector<QZ>& gamma, const std::vector<QZ>& theta) const {
    const std::size_t n = w_.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (gamma[x] + gamma[y] - gamma[w_.add(x, y)] != theta[x * n + y]) return false;
    return true;
  }

 private:
  static Integer common_denominator_of(const Cocycle3& w) {
    Integer d = 1;
    const std::size_t n = w.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) d = lattice::lcm(d, w(a, b, c).denominator());
    return d;
  }

  const Cocycle3& w_;
  Integer den_;
  std::vector<std::size_t> gens_;
  lattice::SmithForm smith_;
};

void check_guards(const Cocycle3& w) {
  if (w.size() > kMaxOrder) throw SizeGuardExceeded("oracle groups are limited to 64 elements");
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (w(a, b, c).denominator() > kMaxDenominator)
          throw SizeGuardExceeded("cocycle denominators are limited to 10^4");
  if (!w.is_normalised()) throw DomainError("cocycle is not normalised");
  if (!w.is_cocycle()) throw DomainError("inconsistent cocycle: dω ≠ 0");
}

}  // namespace

Cocycle3::Cocycle3(FiniteAbGroup group, std::vector<QZ> table)
    : group_(std::move(group)), table_(std::move(table)) {
  elems_ = group_.elements(Integer(static_cast<unsigned long>(kMaxOrder)));
  const std::size_t n = elems_.size();
  if (table_.size() != n * n * n) throw DomainError("cocycle table must have |H|^3 entries");
  sum_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sum_[a * n + b] = group_.index_of(group_.add(elems_[a], elems_[b]));
}

Cocycle3 Cocycle3::from_function(const FiniteAbGroup& group,
                                 const std::function<QZ(const Element&, const Element&, const Element&)>& f) {
  const auto elems = group.elements(Integer(static_cast<unsigned long>(kMaxOrder)));
  std::vector<QZ> table;
  table.reserve(elems.size() * elems.size() * elems.size());
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) table.push_back(f(a, b, c));
  return Cocycle3(group, std::move(table));
}

Cocycle3 Cocycle3::zero(const FiniteAbGroup& group) {
  return from_function(group, [](const Element&, const Element&, const Element&) { return QZ(); });
}

bool Cocycle3::is_cocycle() const {
  const std::size_t n = size();
  const Integer den = common_denominator(table_);
  if (!den.fits_slong_p()) throw SizeGuardExceeded("cocycle denominator too large");
  const long m = den.get_si();
  std::vector<long> v(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i)
    v[i] = Integer(table_[i].numerator() * (den / table_[i].denominator())).get_si();
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return v[(a * n + b) * n + c]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = add(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = add(b, c);
        for (std::size_t d = 0; d < n; ++d) {
          const long s = at(b, c, d) - at(ab, c, d) + at(a, bc, d) - at(a, b, add(c, d)) + at(a, b, c);
          if (s % m != 0) return false;
        }
      }
    }
  return true;
}

bool Cocycle3::is_normalised() const {
  const std::size_t n = size();
  const std::size_t e = group_.index_of(group_.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(*this)(e, a, b).is_zero() || !(*this)(a, e, b).is_zero() || !(*this)(a, b, e).is_zero()) return false;
  return true;
}

Cocycle3 std_cocycle(const Integer& n, const Integer& k) {
  if (n < 1) throw DomainError("std_cocycle: n must be positive");
  const auto g = FiniteAbGroup::cyclic(n);
  if (g.is_trivial()) return Cocycle3::zero(g);
  return Cocycle3::from_function(g, [&](const Element& a, const Element& b, const Element& c) {
    const Integer carry = (b[0] + c[0]) / n;
    return qz(k * a[0] * carry, n);
  });
}

std::vector<QZ> slant(const Cocycle3& w, std::size_t g) {
  const std::size_t n = w.size();
  if (g >= n) throw DomainError("slant: element index out of range");
  std::vector<QZ> theta(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) theta[x * n + y] = w(x, g, y) - w(g, x, y) - w(x, y, g);
  return theta;
}

bool is_two_cocycle(const Cocycle3& w, const std::vector<QZ>& theta) {
  const std::size_t n = w.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!(theta[y * n + z] - theta[w.add(x, y) * n + z] + theta[x * n + w.add(y, z)] - theta[x * n + y]).is_zero())
          return false;
  return true;
}

std::vector<std::vector<QZ>> half_braidings(const Cocycle3& w, std::size_t g) {
  check_guards(w);
  return HalfBraidingSolver(w).solve(g);
}

std::vector<std::vector<QZ>> characters(const FiniteAbGroup& group) {
  const auto elems = group.elements();
  std::vector<std::vector<QZ>> out;
  for (const auto& a : group.elements()) {
    std::vector<QZ> chi;
    chi.reserve(elems.size());
    for (const auto& x : elems) {
      QZ v;
      for (std::size_t i = 0; i < group.rank(); ++i) v += qz(a[i] * x[i], group.invariant_factors()[i]);
      chi.push_back(v);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

forms::QForm cayley_to_form(const CayleyData& data, std::vector<Element>* coordinates) {
  const std::size_t n = data.size;
  if (data.q.size() != n) throw DomainError("cayley_to_form: one value per element required");
  std::vector<std::vector<Integer>> coords(n);
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members{data.zero};
  in[data.zero] = true;
  std::vector<std::size_t> gens;
  std::vector<std::vector<Integer>> relations;

  for (std::size_t x = 0; x < n; ++x) {
    if (in[x]) continue;
    const std::size_t k = gens.size();
    gens.push_back(x);
    for (auto idx : members) coords[idx].push_back(0);
    for (auto& r : relations) r.push_back(0);
    // smallest m with m·x already reached
    std::size_t y = x;
    long m = 1;
    while (!in[y]) {
      y = data.add(y, x);
      ++m;
    }
    std::vector<Integer> rel(k + 1);
    for (std::size_t i = 0; i < k; ++i) rel[i] = -coords[y][i];
    rel[k] = m;
    relations.push_back(std::move(rel));

    const std::vector<std::size_t> old = members;
    std::size_t jx = x;
    for (long j = 1; j < m; ++j) {
      for (auto s : old) {
        const std::size_t e = data.add(jx, s);
        if (in[e]) throw StructuralError("Cayley table is not a group");
        in[e] = true;
        coords[e] = coords[s];
        coords[e][k] = j;
        members.push_back(e);
      }
      jx = data.add(jx, x);
    }
  }
  if (members.size() != n) throw StructuralError("Cayley table is not a group");

  const std::size_t r = gens.size();
  IntMatrix rel(r, relations.size(), Integer(0));
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (std::size_t i = 0; i < relations[c].size(); ++i) rel(i, c) = relations[c][i];
  forms::QuadraticLaw law{std::vector<QZ>(r), forms::QZMatrix(r, r)};
  for (std::size_t i = 0; i < r; ++i) {
    law.diag[i] = data.q[gens[i]];
    for (std::size_t j = i + 1; j < r; ++j) {
      law.off(i, j) = data.q[data.add(gens[i], gens[j])] - data.q[gens[i]] - data.q[gens[j]];
      law.off(j, i) = law.off(i, j);
    }
  }
  if (r == 0) {
    if (coordinates) coordinates->assign(n, Element{});
    return forms::QForm();
  }
  forms::PresentedForm pres;
  try {
    pres = forms::present({rel, law});
  } catch (const DomainError& e) {
    throw StructuralError(std::string("values do not form a quadratic form: ") + e.what());
  }
  if (coordinates) coordinates->assign(n, Element{});
  for (std::size_t e = 0; e < n; ++e) {
    const Element c = pres.project(coords[e]);
    if (pres.form(c) != data.q[e]) throw StructuralError("values do not form a quadratic form");
    if (coordinates) (*coordinates)[e] = c;
  }
  return pres.form;
}

BruteCentre brute_centre(const Cocycle3& w) {
  check_guards(w);
  const std::size_t n = w.size();
  const HalfBraidingSolver solver(w);

  BruteCentre out;
  std::map<std::pair<std::size_t, std::vector<QZ>>, std::size_t> index;
  for (std::size_t g = 0; g < n; ++g)
    for (auto& gamma : solver.solve(g)) {
      index.emplace(std::make_pair(g, gamma), out.pieces.size());
      out.pieces.push_back({g, std::move(gamma)});
    }

  // Products are formed on demand; a product found among the verified pieces
  // is itself verified.
  const std::size_t m = out.pieces.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> products;
  auto multiply = [&](std::size_t i, std::size_t j) {
    if (const auto it = products.find({i, j}); it != products.end()) return it->second;
    const auto& [g, gamma] = out.pieces[i];
    const auto& [h, delta] = out.pieces[j];
    std::vector<QZ> prod(n);
    for (std::size_t z = 0; z < n; ++z) prod[z] = gamma[z] + delta[z] - w(z, g, h) + w(g, z, h) - w(g, h, z);
    const auto found = index.find({w.add(g, h), prod});
    if (found == index.end()) throw StructuralError("tensor product of centre pieces is not a centre piece");
    products.emplace(std::make_pair(i, j), found->second);
    return found->second;
  };

  CayleyData data;
  data.size = m;
  data.zero = index.at({w.group().index_of(w.group().zero()), std::vector<QZ>(n)});
  data.add = multiply;
  for (const auto& p : out.pieces) data.q.push_back(p.gamma[p.g]);
  out.form = cayley_to_form(data, &out.coordinates);
  out.group = out.form.group();
  return out;
}

ExactSequenceReport exact_sequence_check(const Cocycle3& w) {
  check_guards(w);
  const std::size_t n = w.size();
  const HalfBraidingSolver solver(w);
  ExactSequenceReport r;

  const std::size_t e = w.group().index_of(w.group().zero());
  const auto kernel = solver.solve(e);
  const auto chars = characters(w.group());
  r.kernel_size = kernel.size();
  r.kernel_is_characters =
      std::set<std::vector<QZ>>(kernel.begin(), kernel.end()) == std::set<std::vector<QZ>>(chars.begin(), chars.end()) &&
      kernel.size() == chars.size();

  // For abelian H a 2-cocycle with values in ℚ/ℤ is a coboundary iff it is symmetric.
  bool image_ok = true;
  for (std::size_t g = 0; g < n; ++g) {
    const auto sols = solver.solve(g);
    const auto theta = slant(w, g);
    bool symmetric = true;
    for (std::size_t x = 0; x < n && symmetric; ++x)
      for (std::size_t y = 0; y < n && symmetric; ++y) symmetric = theta[x * n + y] == theta[y * n + x];
    if (!sols.empty()) ++r.image_size;
    if (sols.empty() == symmetric) image_ok = false;
    if (!sols.empty() && sols.size() != chars.size()) image_ok = false;
    r.pi0_size += sols.size();
  }
  r.image_is_coboundary_locus = image_ok;
  r.cardinality = r.pi0_size == chars.size() * r.image_size;
  return r;
}

}  // namespace drinfeld::oracle
