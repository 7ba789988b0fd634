#include "drinfeld/qform.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld::forms {

namespace {

using lattice::lcm;

// Elements of a group of order ≤ 10⁶ addressed by mixed-radix index, with
// q-values stored as numerators over a common denominator.
class IndexedForm {
 public:
  explicit IndexedForm(const QForm& q) {
    const auto& d = q.group().invariant_factors();
    Integer n = 1;
    for (const auto& v : q.diag()) n = lcm(n, v.denominator());
    for (std::size_t i = 0; i < q.offdiag().rows(); ++i)
      for (std::size_t j = 0; j < q.offdiag().cols(); ++j) n = lcm(n, q.offdiag()(i, j).denominator());
    fast_ = n.fits_slong_p() && n < (Integer(1) << 40);
    den_ = n;
    modulus_ = fast_ ? n.get_si() : 0;
    long stride = 1;
    for (const auto& f : d) {
      factors_.push_back(f.get_si());
      strides_.push_back(stride);
      stride *= f.get_si();
    }
    size_ = static_cast<std::size_t>(stride);
    if (fast_) {
      diag_.resize(d.size());
      off_.assign(d.size() * d.size(), 0);
      for (std::size_t i = 0; i < d.size(); ++i) {
        diag_[i] = scaled(q.diag()[i]);
        for (std::size_t j = 0; j < d.size(); ++j) off_[i * d.size() + j] = scaled(q.offdiag()(i, j));
      }
      values_.resize(size_);
      std::vector<long> x(d.size(), 0);
      for (std::size_t idx = 0; idx < size_; ++idx) {
        values_[idx] = eval(x);
        increment(x);
      }
    } else {
      for (const auto& e : q.group().elements()) slow_values_.push_back(q(e));
    }
  }

  std::size_t size() const { return size_; }
  std::size_t rank() const { return factors_.size(); }
  bool fast() const { return fast_; }
  long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  long generator(std::size_t i) const { return strides_[i]; }

  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      long c = coord(a, i) + coord(b, i);
      if (c >= factors_[i]) c -= factors_[i];
      out += static_cast<std::size_t>(c * strides_[i]);
    }
    return out;
  }
  std::size_t scale(long n, std::size_t a) const {
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out += static_cast<std::size_t>(((n % factors_[i]) * coord(a, i) % factors_[i]) * strides_[i]);
    return out;
  }

  long value(std::size_t a) const { return values_[a]; }
  const QZ& slow_value(std::size_t a) const { return slow_values_[a]; }
  long modulus() const { return modulus_; }

 private:
  long coord(std::size_t a, std::size_t i) const {
    return static_cast<long>(a / static_cast<std::size_t>(strides_[i])) % factors_[i];
  }
  long scaled(const QZ& v) const { return Integer(v.numerator() * (den_ / v.denominator())).get_si(); }
  long mulmod(long a, long b) const {
    return static_cast<long>((static_cast<__int128>(a) * b) % modulus_);
  }
  long eval(const std::vector<long>& x) const {
    long acc = 0;
    const std::size_t m = x.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      acc = (acc + mulmod(mulmod(x[i], x[i]), diag_[i])) % modulus_;
      for (std::size_t j = i + 1; j < m; ++j)
        if (x[j] != 0) acc = (acc + mulmod(mulmod(x[i], x[j]), off_[i * m + j])) % modulus_;
    }
    return acc;
  }
  void increment(std::vector<long>& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (++x[i] < factors_[i]) return;
      x[i] = 0;
    }
  }

  bool fast_ = false;
  Integer den_;
  long modulus_ = 0;
  std::vector<long> factors_, strides_, diag_, off_, values_;
  std::vector<QZ> slow_values_;
  std::size_t size_ = 1;
};

// Exhaustive sweeps run only below this many elementary checks; above it the
// generator criterion alone decides.
constexpr double kSweepBudget = 4.0e7;

template <class Value, class Sub, class Eq>
bool sweep(const IndexedForm& t, Value value, Sub sub, Eq eq) {
  const std::size_t n = t.size();
  const long e = t.exponent();
  if (static_cast<double>(n) * static_cast<double>(e) <= kSweepBudget) {
    for (std::size_t a = 0; a < n; ++a)
      for (long k = 2; k <= e; ++k) {
        // q(ka) = k²q(a)
        const auto lhs = value(t.scale(k, a));
        const auto rhs = value(a);
        if (!eq(lhs, rhs, k * k)) return false;
      }
  }
  if (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(t.rank()) > kSweepBudget)
    return true;
  auto sigma = [&](std::size_t a, std::size_t c) { return sub(value(t.add(a, c)), value(a), value(c)); };
  for (std::size_t i = 0; i < t.rank(); ++i) {
    const auto g = static_cast<std::size_t>(t.generator(i));
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t ag = t.add(a, g);
      for (std::size_t c = 0; c < n; ++c) {
        const auto lhs = sigma(ag, c);
        const auto rhs = sigma(a, c) + sigma(g, c);
        if (!eq(lhs, rhs, 1)) return false;
      }
    }
  }
  return true;
}

}  // namespace

QForm::QForm(FiniteAbGroup group, std::vector<QZ> diag, QZMatrix offdiag)
    : group_(std::move(group)), diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  const std::size_t m = group_.rank();
  if (diag_.size() != m) throw DomainError("form needs one diagonal value per generator");
  if (m == 0 && offdiag_.rows() == 0) offdiag_ = QZMatrix(0, 0);
  if (offdiag_.rows() != m || offdiag_.cols() != m)
    throw DomainError("off-diagonal table must be " + std::to_string(m) + "×" + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) {
    offdiag_(i, i) = QZ();
    for (std::size_t j = i + 1; j < m; ++j)
      if (offdiag_(i, j) != offdiag_(j, i)) throw DomainError("off-diagonal table must be symmetric");
  }
}

QForm::QForm(FiniteAbGroup group, std::vector<QZ> diag)
    : QForm(group, std::move(diag), QZMatrix(group.rank(), group.rank())) {}

QForm QForm::cyclic(const Integer& n, const QZ& value) {
  auto g = FiniteAbGroup::cyclic(n);
  if (g.is_trivial()) return {};
  return QForm(g, {value});
}

QZ QForm::operator()(std::span<const Integer> x) const {
  const Element e = group_.reduce(x);
  QZ acc;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    acc += Integer(e[i] * e[i]) * diag_[i];
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (e[j] != 0) acc += Integer(e[i] * e[j]) * offdiag_(i, j);
  }
  return acc;
}

QZ QForm::sigma(std::span<const Integer> a, std::span<const Integer> b) const {
  const Element x = group_.reduce(a);
  const Element y = group_.reduce(b);
  return (*this)(group_.add(x, y)) - (*this)(x) - (*this)(y);
}

bool QForm::satisfies_generator_conditions() const {
  const auto& d = group_.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(Integer(d[i] * d[i]) * diag_[i]).is_zero()) return false;
    if (!(Integer(2 * d[i]) * diag_[i]).is_zero()) return false;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      if (!(d[i] * offdiag_(i, j)).is_zero() || !(d[j] * offdiag_(i, j)).is_zero()) return false;
    }
  }
  return true;
}

QZ eval_q(const QForm& q, std::span<const Integer> x) {
  if (x.size() != q.group().rank())
    throw DomainError("element has " + std::to_string(x.size()) + " coordinates, form lives on " +
                      q.group().str());
  return q(x);
}

QZMatrix associated_bilinear(const QForm& q) {
  const std::size_t m = q.group().rank();
  QZMatrix s(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    s(i, i) = Integer(2) * q.diag()[i];
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) s(i, j) = q.offdiag()(i, j);
  }
  return s;
}

std::vector<std::vector<QZ>> bilinear_table(const QForm& q, const Integer& limit) {
  const auto elems = q.group().elements(limit);
  std::vector<QZ> values;
  values.reserve(elems.size());
  for (const auto& e : elems) values.push_back(q(e));
  std::vector<std::vector<QZ>> table(elems.size(), std::vector<QZ>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      table[a][b] = values[q.group().index_of(q.group().add(elems[a], elems[b]))] - values[a] - values[b];
  return table;
}

bool is_quadratic(const QForm& q) {
  if (q.group().order() > kEnumerationLimit)
    throw SizeGuardExceeded("is_quadratic: group " + q.group().str() + " exceeds 10^6 elements");
  if (!q.satisfies_generator_conditions()) return false;
  const IndexedForm t(q);
  if (t.fast()) {
    const long n = t.modulus();
    auto value = [&](std::size_t a) { return t.value(a); };
    auto sub = [n](long ab, long a, long b) { return ((ab - a - b) % n + 2 * n) % n; };
    auto eq = [n](long lhs, long rhs, long k) {
      return (lhs - static_cast<long>((static_cast<__int128>(k % n) * rhs) % n)) % n == 0;
    };
    return sweep(t, value, sub, eq);
  }
  auto value = [&](std::size_t a) { return t.slow_value(a); };
  auto sub = [](const QZ& ab, const QZ& a, const QZ& b) { return ab - a - b; };
  auto eq = [](const QZ& lhs, const QZ& rhs, long k) { return lhs == Integer(k) * rhs; };
  return sweep(t, value, sub, eq);
}

std::vector<QForm> enumerate_qforms(const Integer& n) {
  if (n < 1) throw DomainError("enumerate_qforms: n must be positive");
  if (n == 1) return {QForm()};
  const Integer n2 = n * n;
  std::vector<QForm> out;
  for (Integer j = 0; j < n2; ++j) {
    // 2n·q(1) = 0 is necessary; the full check below decides
    if (lattice::mod(2 * j, n) != 0) continue;
    QForm q = QForm::cyclic(n, qz(j, n2));
    if (is_quadratic(q)) out.push_back(std::move(q));
  }
  return out;
}

Integer bilinear_count(const Integer& n) {
  if (n < 1) throw DomainError("bilinear_count: n must be positive");
  // b is fixed by b(1,1) = v with n·v = 0
  const Integer n2 = n * n;
  Integer count = 0;
  for (Integer j = 0; j < n2; ++j)
    if ((n * qz(j, n2)).is_zero()) ++count;
  return count;
}

Integer soft_h3_order(const Integer& n) {
  const Integer quad = static_cast<unsigned long>(enumerate_qforms(n).size());
  const Integer bilin = bilinear_count(n);
  if (quad % bilin != 0) throw StructuralError("|Quad| is not a multiple of |Bilin|");
  return quad / bilin;
}

std::string to_string(NameTag tag) {
  switch (tag) {
    case NameTag::Vec: return "Vec";
    case NameTag::VecZ2: return "VecZ2";
    case NameTag::sVec: return "sVec";
    case NameTag::Semi: return "Semi";
    case NameTag::SemiBar: return "SemiBar";
    case NameTag::Structured: return "Structured";
  }
  return "Structured";
}

std::string BraidedName::str() const { return tag == NameTag::Structured ? descriptor : to_string(tag); }

BraidedName name_form(const QForm& q) {
  const auto& g = q.group();
  if (g.is_trivial()) return {NameTag::Vec, {}};
  if (g == FiniteAbGroup::cyclic(2)) {
    const QZ v = q.diag()[0];
    if (v.is_zero()) return {NameTag::VecZ2, {}};
    if (v == qz(1, 4)) return {NameTag::Semi, {}};
    if (v == qz(1, 2)) return {NameTag::sVec, {}};
    if (v == qz(3, 4)) return {NameTag::SemiBar, {}};
  }
  std::string d = g.str() + ": ";
  if (g.rank() == 1) {
    d += "q(g)=" + q.diag()[0].str();
  } else {
    for (std::size_t i = 0; i < g.rank(); ++i)
      d += (i ? ", q(g" : "q(g") + std::to_string(i + 1) + ")=" + q.diag()[i].str();
    for (std::size_t i = 0; i < g.rank(); ++i)
      for (std::size_t j = i + 1; j < g.rank(); ++j)
        d += ", σ(g" + std::to_string(i + 1) + ",g" + std::to_string(j + 1) + ")=" + q.offdiag()(i, j).str();
  }
  return {NameTag::Structured, d};
}

std::map<QZ, Integer> value_multiset(const QForm& q) {
  std::map<QZ, Integer> out;
  for (const auto& e : q.group().elements()) ++out[q(e)];
  return out;
}

bool iso_forms(const QForm& a, const QForm& b) {
  const Integer limit = 10000;
  if (a.group().order() > limit || b.group().order() > limit)
    throw SizeGuardExceeded("iso_forms: groups are limited to 10^4 elements");
  if (!(a.group() == b.group())) return false;
  if (value_multiset(a) != value_multiset(b)) return false;

  const auto& ga = a.group();
  const auto& gb = b.group();
  const std::size_t m = ga.rank();
  const auto elems_b = gb.elements();
  const auto elems_a = ga.elements();

  std::vector<Element> gens_a(m);
  for (std::size_t i = 0; i < m; ++i) {
    gens_a[i] = ga.zero();
    gens_a[i][i] = 1;
  }
  std::vector<Element> image(m);

  auto complete = [&]() {
    std::set<Element> seen;
    for (const auto& x : elems_a) {
      Element y = gb.zero();
      for (std::size_t i = 0; i < m; ++i) y = gb.add(y, gb.scale(x[i], image[i]));
      if (!seen.insert(y).second) return false;
      if (b(y) != a(x)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == m) return complete();
    const Integer& d = ga.invariant_factors()[i];
    for (const auto& y : elems_b) {
      if (gb.element_order(y) != d) continue;
      if (b(y) != a.diag()[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = b.sigma(y, image[j]) == a.offdiag()(i, j);
      if (!ok) continue;
      image[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

std::vector<Element> radical(const QForm& q) {
  const auto& g = q.group();
  std::vector<Element> out;
  for (const auto& x : g.elements()) {
    bool in = true;
    for (std::size_t j = 0; j < g.rank() && in; ++j) {
      Element e = g.zero();
      e[j] = 1;
      in = q.sigma(x, e).is_zero();
    }
    if (in) out.push_back(x);
  }
  return out;
}

bool is_nondegenerate(const QForm& q) { return radical(q).size() == 1; }

GaussSum gauss_sum(const QForm& q) {
  GaussSum out;
  out.values = value_multiset(q);
  for (const auto& [v, count] : out.values) {
    const double angle = 2.0 * std::numbers::pi * v.representative().get_d();
    out.value += count.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  out.nondegenerate = is_nondegenerate(q);
  return out;
}

}  // namespace drinfeld::forms
