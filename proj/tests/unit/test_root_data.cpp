#include "doctest.h"

#include "drinfeld/root_data.hpp"

using namespace drinfeld;
using namespace drinfeld::roots;

namespace {

// Simple roots in the standard Euclidean realisation (rows).
RatMatrix realisation(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  const std::size_t dim = t.series == Series::A ? n + 1 : n;
  RatMatrix r(n, dim, Rational(0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    r(i, i) = 1;
    r(i, i + 1) = -1;
  }
  switch (t.series) {
    case Series::A:
      r(n - 1, n - 1) = 1;
      r(n - 1, n) = -1;
      break;
    case Series::B:
      r(n - 1, n - 1) = 1;
      break;
    case Series::C:
      r(n - 1, n - 1) = 2;
      break;
    case Series::D:
      r(n - 1, n - 2) = 1;
      r(n - 1, n - 1) = 1;
      break;
    default:
      FAIL("no realisation");
  }
  return r;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Root Gram matrix in the basic inner product (long roots of norm 2).
RatMatrix basic_root_gram(const SimpleType& t) {
  const auto r = realisation(t);
  RatMatrix g(r.rows(), r.rows());
  Rational longest = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) longest = std::max(longest, Rational(dot(r.row(i), r.row(i))));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.rows(); ++j) g(i, j) = 2 * dot(r.row(i), r.row(j)) / longest;
  return g;
}

std::vector<SimpleType> classical() {
  std::vector<SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= 7; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= 7; ++n) out.push_back({Series::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Series::D, n});
  return out;
}

std::vector<Rational> col(const RatMatrix& m, std::size_t j) { return m.col(j); }

}  // namespace

TEST_CASE("validation of types") {
  CHECK_THROWS_AS(SimpleType({Series::B, 1}).validate(), DomainError);
  CHECK_THROWS_AS(SimpleType({Series::E, 5}).validate(), DomainError);
  CHECK_THROWS_AS(SimpleType({Series::G, 3}).validate(), DomainError);
  CHECK_THROWS_AS(SimpleType({Series::A, 0}).validate(), DomainError);
  CHECK_NOTHROW(SimpleType({Series::D, 3}).validate());
  CHECK(SimpleType::parse("E7") == SimpleType{Series::E, 7});
  CHECK(SimpleType{Series::C, 4}.str() == "C4");
}

TEST_CASE("Cartan matrices match the Euclidean realisation") {
  for (const auto& t : classical()) {
    const auto r = realisation(t);
    const auto c = cartan_matrix(t);
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.rows(); ++j)
        CHECK(Rational(c(i, j)) == 2 * dot(r.row(i), r.row(j)) / dot(r.row(j), r.row(j)));
  }
}

TEST_CASE("Cartan determinants and centre orders") {
  struct Row {
    SimpleType t;
    long det;
    std::vector<Integer> factors;
  };
  const std::vector<Row> rows = {
      {{Series::A, 1}, 2, {2}},   {{Series::A, 5}, 6, {6}},          {{Series::B, 3}, 2, {2}},
      {{Series::C, 4}, 2, {2}},   {{Series::D, 5}, 4, {4}},          {{Series::D, 4}, 4, {2, 2}},
      {{Series::D, 6}, 4, {2, 2}}, {{Series::E, 6}, 3, {3}},         {{Series::E, 7}, 2, {2}},
      {{Series::E, 8}, 1, {}},    {{Series::F, 4}, 1, {}},           {{Series::G, 2}, 1, {}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.t.str());
    CHECK(determinant(cartan_matrix(row.t)) == row.det);
    CHECK(centre_of(row.t).group.invariant_factors() == row.factors);
  }
}

TEST_CASE("coroot Gram: symmetric, positive definite, even, short coroots of norm 2") {
  for (const auto& t : classical()) {
    const auto g = coroot_gram(t);
    CHECK(is_symmetric(g));
    CHECK(is_positive_definite(g));
    Rational smallest = g(0, 0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      CHECK(g(i, i).get_den() == 1);
      CHECK(g(i, i).get_num() % 2 == 0);
      smallest = std::min(smallest, g(i, i));
    }
    CHECK(smallest == 2);
  }
}

TEST_CASE("fundamental coweight norms agree with the inverse root Gram matrix") {
  // ⟨ωᵢ, ωⱼ⟩ = (G⁻¹)ᵢⱼ where G is the root Gram matrix in the basic inner product
  for (const auto& t : classical()) {
    CAPTURE(t.str());
    const auto inv = inverse(basic_root_gram(t));
    const auto w = fundamental_coweights(t);
    for (std::size_t i = 0; i < w.cols(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) CHECK(coweight_pairing(t, col(w, i), col(w, j)) == inv(i, j));
  }
}

TEST_CASE("exceptional minuscule coweight norms") {
  const SimpleType e6{Series::E, 6}, e7{Series::E, 7};
  CHECK(coweight_norm(e6, col(fundamental_coweights(e6), 0)) == Rational(4, 3));
  CHECK(coweight_norm(e7, col(fundamental_coweights(e7), 6)) == Rational(3, 2));
}

TEST_CASE("named generators") {
  CHECK(centre_of({Series::A, 4}).labels == std::vector<int>{1});
  CHECK(centre_of({Series::C, 3}).labels == std::vector<int>{3});
  CHECK(centre_of({Series::D, 5}).labels == std::vector<int>{5});
  CHECK(centre_of({Series::D, 6}).labels == std::vector<int>{5, 6});
  CHECK(centre_of({Series::E, 7}).labels == std::vector<int>{7});
  const auto a3 = centre_of({Series::A, 3});
  // ω₂ is twice ω₁ in Φ∨/Π ≅ ℤ/4
  CHECK(a3.class_of(std::vector<Integer>{0, 1, 0}) == Element{2});
  CHECK(a3.class_of(std::vector<Integer>{0, 0, 1}) == Element{3});
  // simple coroots vanish
  const auto c = cartan_matrix({Series::A, 3});
  for (std::size_t j = 0; j < 3; ++j) {
    const auto v = c.col(j);
    CHECK(a3.class_of(v) == Element{0});
  }
}
