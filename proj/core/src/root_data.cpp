#include "drinfeld/root_data.hpp"

#include <map>
#include <mutex>
#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/smith.hpp"

namespace drinfeld::roots {

namespace {

void link(IntMatrix& c, int i, int j, int cij = -1, int cji = -1) {
  c(i, j) = cij;
  c(j, i) = cji;
}

IntMatrix build_cartan(const SimpleType& t) {
  const int n = t.rank;
  IntMatrix c(n, n, Integer(0));
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  switch (t.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -2, -1);
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 2, n - 1, -1, -2);
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 2);
      link(c, n - 3, n - 1);
      break;
    case Series::E:
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Series::F:
      link(c, 0, 1);
      link(c, 1, 2, -2, -1);
      link(c, 2, 3);
      break;
    case Series::G:
      link(c, 0, 1, -1, -3);
      break;
  }
  return c;
}

Integer expected_det(const SimpleType& t) {
  switch (t.series) {
    case Series::A: return t.rank + 1;
    case Series::B:
    case Series::C: return 2;
    case Series::D: return 4;
    case Series::E: return 9 - t.rank;
    case Series::F:
    case Series::G: return 1;
  }
  return 0;
}

// Minimal positive integer diagonal d with d·C symmetric.
std::vector<Integer> symmetriser(const IntMatrix& c) {
  const std::size_t n = c.rows();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c(i, j) == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rational(c(i, j)) / Rational(c(j, i));
      stack.push_back(j);
    }
  }
  Integer den = 1;
  for (auto& v : d) {
    if (v <= 0) throw StructuralError("Cartan matrix is not connected or not symmetrisable");
    v.canonicalize();
    den = lattice::lcm(den, v.get_den());
  }
  std::vector<Integer> out(n);
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = Integer(d[i] * den);
    g = lattice::gcd(g, out[i]);
  }
  for (auto& v : out) v /= g;
  return out;
}

struct TypeData {
  IntMatrix cartan;
  RatMatrix gram;
  RatMatrix coweights;
  CentreData centre;
};

std::vector<int> named_generators(const SimpleType& t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
    case Series::B: return {1};
    case Series::C: return {n};
    case Series::D:
      if (n % 2 == 1) return {n};
      return {n - 1, n};
    case Series::E:
      if (n == 6) return {1};
      if (n == 7) return {7};
      return {};
    case Series::F:
    case Series::G: return {};
  }
  return {};
}

TypeData build(const SimpleType& t) {
  TypeData out;
  out.cartan = build_cartan(t);
  const IntMatrix& c = out.cartan;
  const std::size_t n = c.rows();

  if (determinant(c) != expected_det(t))
    throw StructuralError(t.str() + ": Cartan matrix has unexpected determinant");
  const auto d = symmetriser(c);
  out.gram = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram(i, j) = Rational(d[i] * c(i, j));
  if (!is_symmetric(out.gram)) throw StructuralError(t.str() + ": symmetrisation failed");
  if (!is_positive_definite(out.gram)) throw StructuralError(t.str() + ": Gram matrix not positive definite");

  out.coweights = inverse(to_rational(c));

  // Φ∨/Π is the cokernel of C acting on fundamental-coweight coordinates.
  const lattice::Cokernel coker(c, n);
  CentreData& z = out.centre;
  z.cartan = c;
  z.group = coker.finite();
  z.labels = named_generators(t);
  if (z.labels.size() != z.group.rank())
    throw StructuralError(t.str() + ": named generators do not match the centre's rank");
  for (int label : z.labels) z.lifts.push_back(out.coweights.col(static_cast<std::size_t>(label - 1)));

  // The named generators must realise the invariant-factor decomposition.
  std::set<std::vector<Integer>> seen;
  for (const auto& coeffs : z.group.elements()) {
    std::vector<Integer> v(n, Integer(0));
    for (std::size_t a = 0; a < coeffs.size(); ++a) v[static_cast<std::size_t>(z.labels[a] - 1)] += coeffs[a];
    seen.insert(coker.project(v).finite);
  }
  if (Integer(static_cast<unsigned long>(seen.size())) != z.group.order())
    throw StructuralError(t.str() + ": named generators do not form a basis of the centre");
  return out;
}

const TypeData& data_for(const SimpleType& t) {
  t.validate();
  static std::mutex mu;
  static std::map<std::pair<int, int>, TypeData> cache;
  const std::lock_guard lock(mu);
  const auto key = std::make_pair(static_cast<int>(t.series), t.rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(t)).first;
  return it->second;
}

}  // namespace

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

void SimpleType::validate() const {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 3; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw DomainError("no simple type " + str());
  if (rank > 64) throw DomainError("rank of " + str() + " is unreasonably large");
}

std::string SimpleType::str() const { return series_letter(series) + std::to_string(rank); }

Series SimpleType::parse_series(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'G') return static_cast<Series>(text[0] - 'A');
  throw DomainError("unknown series '" + std::string(text) + "'");
}

SimpleType SimpleType::parse(std::string_view text) {
  if (text.size() < 2) throw DomainError("bad simple type '" + std::string(text) + "'");
  SimpleType t;
  t.series = parse_series(text.substr(0, 1));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(std::string(text.substr(1)), &used);
    if (used != text.size() - 1) throw DomainError("");
  } catch (const std::exception&) {
    throw DomainError("bad simple type '" + std::string(text) + "'");
  }
  t.validate();
  return t;
}

IntMatrix cartan_matrix(const SimpleType& t) { return data_for(t).cartan; }
RatMatrix coroot_gram(const SimpleType& t) { return data_for(t).gram; }
RatMatrix fundamental_coweights(const SimpleType& t) { return data_for(t).coweights; }
CentreData centre_of(const SimpleType& t) { return data_for(t).centre; }

Element CentreData::class_of(std::span<const Integer> coweight_coords) const {
  const std::size_t n = cartan.rows();
  if (coweight_coords.size() != n) throw DomainError("coweight has the wrong number of coordinates");
  const RatMatrix cinv = inverse(to_rational(cartan));
  for (const auto& coeffs : group.elements()) {
    std::vector<Rational> diff(n);
    for (std::size_t i = 0; i < n; ++i) diff[i] = Rational(coweight_coords[i]);
    for (std::size_t a = 0; a < coeffs.size(); ++a) diff[static_cast<std::size_t>(labels[a] - 1)] -= coeffs[a];
    const auto in_coroots = cinv.apply(diff);
    bool integral = true;
    for (const auto& v : in_coroots) integral = integral && v.get_den() == 1;
    if (integral) return coeffs;
  }
  throw StructuralError("coweight class not reached by the named generators");
}

Rational coweight_pairing(const SimpleType& t, std::span<const Rational> v, std::span<const Rational> w) {
  const RatMatrix& g = data_for(t).gram;
  if (v.size() != g.rows() || w.size() != g.rows())
    throw DomainError("coweight of " + std::to_string(v.size()) + " coordinates for rank " +
                      std::to_string(g.rows()));
  Rational acc = 0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) acc += v[i] * g(i, j) * w[j];
  return acc;
}

Rational coweight_norm(const SimpleType& t, std::span<const Rational> w) { return coweight_pairing(t, w, w); }

}  // namespace drinfeld::roots
