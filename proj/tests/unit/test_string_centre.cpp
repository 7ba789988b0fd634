#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "drinfeld/discrete_oracle.hpp"
#include "drinfeld/presentation.hpp"
#include "drinfeld/string_centre.hpp"
#include "drinfeld/table1.hpp"

using namespace drinfeld;
using namespace drinfeld::centre;
using roots::Series;
using roots::SimpleType;

namespace {

const SimpleType kA1{Series::A, 1};

GroupSpec so4(int kl, int kr) {
  GroupSpec s;
  s.simples = {{kA1, kl}, {kA1, kr}};
  s.kernel = {{{}, {{Integer(1)}, {Integer(1)}}}};
  return s;
}

GroupSpec so3(int k) {
  GroupSpec s;
  s.simples = {{kA1, k}};
  s.kernel = {{{}, {{Integer(1)}}}};
  return s;
}

GroupSpec u2(int j, int k) {
  GroupSpec s;
  s.torus = torus::TorusLevel{IntMatrix{{Integer(-j)}}};
  s.simples = {{kA1, k}};
  s.kernel = {{{Rational(1, 2)}, {{Integer(1)}}}};
  return s;
}

forms::QForm klein(const QZ& a, const QZ& b, const QZ& s) {
  forms::QZMatrix off(2, 2);
  off(0, 1) = off(1, 0) = s;
  return forms::QForm(FiniteAbGroup({Integer(2), Integer(2)}), {a, b}, off);
}

// Z⊥/Z rebuilt element by element: enumerate Z⊥, form cosets, tabulate the
// induced addition and q, then normalise the Cayley table.
forms::QForm elementwise_quotient(const forms::QForm& q, const std::vector<Element>& gens) {
  const auto& g = q.group();
  const auto z = subgroup_elements(g, gens);
  std::vector<Element> perp;
  for (const auto& x : g.elements()) {
    bool ok = true;
    for (const auto& y : z) ok = ok && q.sigma(x, y).is_zero();
    if (ok) perp.push_back(x);
  }
  std::map<Element, std::size_t> coset;
  std::vector<Element> reps;
  for (const auto& x : perp) {
    if (coset.contains(x)) continue;
    for (const auto& y : z) coset[g.add(x, y)] = reps.size();
    reps.push_back(x);
  }
  oracle::CayleyData data;
  data.size = reps.size();
  data.zero = coset.at(g.zero());
  data.add = [&](std::size_t a, std::size_t b) { return coset.at(g.add(reps[a], reps[b])); };
  for (const auto& r : reps) data.q.push_back(q(r));
  return oracle::cayley_to_form(data);
}

}  // namespace

TEST_CASE("simply-connected centres") {
  CHECK(forms::name_form(sc_centre(kA1, 2)).tag == forms::NameTag::sVec);
  for (auto t : {SimpleType{Series::E, 8}, SimpleType{Series::F, 4}, SimpleType{Series::G, 2}})
    for (int k = 1; k <= 3; ++k) CHECK(sc_centre(t, k).group().is_trivial());
  const auto b2 = sc_centre({Series::B, 2}, 1);
  CHECK(b2.group() == FiniteAbGroup::cyclic(2));
  CHECK(b2.diag()[0] == qz(1, 2));
  const auto d4 = sc_centre({Series::D, 4}, 1);
  CHECK(d4 == klein(qz(1, 2), qz(1, 2), qz(1, 2)));
  CHECK_THROWS_AS(sc_centre({Series::E, 9}, 1), DomainError);
}

TEST_CASE("centre forms are quadratic and match Table 1 on consistent rows") {
  for (const auto& t : table1::table_types())
    for (int k = -3; k <= 6; ++k) {
      const auto q = sc_centre(t, k);
      CHECK(forms::is_quadratic(q));
      if (t.series == Series::C || t.series == Series::E) continue;
      for (const auto& cell : table1::cells(t, k)) CHECK(cell.match());
    }
}

TEST_CASE("Table 1 generator values by direct formula") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k <= 6; ++k) CHECK(sc_centre({Series::A, n - 1}, k).diag()[0] == qz(k * (n - 1), 2 * n));
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 6; ++k) {
      CHECK(sc_centre({Series::D, 2 * m + 1}, k).diag()[0] == qz(k * (2 * m + 1), 8));
      const auto q = sc_centre({Series::D, 2 * m + 2}, k);
      CHECK(q.diag()[0] == qz(k * (m + 1), 4));
      CHECK(q.diag()[1] == qz(k * (m + 1), 4));
      CHECK(q(Element{1, 1}) == qz(k, 2));
    }
  CHECK(sc_centre({Series::E, 6}, 1).diag()[0] == qz(2, 3));
}

TEST_CASE("lift independence under coroot shifts") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-6, 6);
  for (const auto& t : table1::table_types()) {
    const auto c = roots::centre_of(t);
    for (int k = 1; k <= 6; ++k) {
      const auto q = sc_centre(t, k);
      for (std::size_t g = 0; g < c.lifts.size(); ++g)
        for (int s = 0; s < 20; ++s) {
          auto lift = c.lifts[g];
          for (auto& v : lift) v += d(rng);
          CHECK(QZ(Rational(k, 2) * roots::coweight_norm(t, lift)) == q.diag()[g]);
        }
    }
  }
}

TEST_CASE("exceptional isomorphisms") {
  for (int k = 0; k <= 6; ++k) {
    CHECK(forms::iso_forms(sc_centre({Series::B, 2}, k), sc_centre({Series::C, 2}, k)));
    CHECK(forms::iso_forms(sc_centre({Series::A, 3}, k), sc_centre({Series::D, 3}, k)));
  }
}

TEST_CASE("products") {
  const auto spin4 = cover_centre(so4(1, 1));
  CHECK(forms::iso_forms(spin4.finite, klein(qz(1, 4), qz(1, 4), QZ())));
  CHECK(spin4.finite(Element{1, 1}) == qz(1, 2));

  GroupSpec mixed;
  mixed.torus = torus::TorusLevel{IntMatrix{{-1}}};
  mixed.simples = {{kA1, 2}};
  const auto m = cover_centre(mixed);
  CHECK(m.vector_dim == 1);
  CHECK(forms::iso_forms(m.finite, klein(qz(1, 4), qz(1, 2), QZ())));

  GroupSpec single;
  single.simples = {{kA1, 3}};
  CHECK(cover_centre(single).finite == sc_centre(kA1, 3));
}

TEST_CASE("SU(2) names") {
  const forms::NameTag expected[] = {forms::NameTag::VecZ2, forms::NameTag::Semi, forms::NameTag::sVec,
                                     forms::NameTag::SemiBar};
  for (int k = 0; k <= 12; ++k) {
    GroupSpec s;
    s.simples = {{kA1, k}};
    const auto r = quotient_centre(s);
    REQUIRE(r.name);
    CHECK(r.name->tag == expected[k % 4]);
  }
}

TEST_CASE("kernel lifts") {
  const auto s = so4(2, 2);
  const auto cover = cover_centre(s);
  const auto lift = lift_kernel(s, cover);
  REQUIRE(lift.generators.size() == 1);
  CHECK(cover.finite_coords(lift.generators[0].pre) == cover.finite.group().reduce(std::vector<Integer>{1, 1}));
  CHECK(lift.elements.size() == 2);

  GroupSpec plain;
  plain.simples = {{kA1, 3}};
  CHECK(lift_kernel(plain, cover_centre(plain)).elements.size() == 1);
  CHECK(level_descends(plain));
}

TEST_CASE("descent: SO(4) grid and SO(3) line") {
  for (int kl = -8; kl <= 8; ++kl)
    for (int kr = -8; kr <= 8; ++kr) {
      const auto r = quotient_centre(so4(kl, kr));
      // q on the lifted diagonal is (kl + kr)/4
      CHECK(r.kernel_values.at(0) == qz(kl + kr, 4));
      CHECK(r.descends == (((kl + kr) % 4 + 4) % 4 == 0));
      CHECK(level_descends(so4(kl, kr)) == r.descends);
      if (!r.descends) {
        CHECK_FALSE(r.centre);
        continue;
      }
      const int m = ((kl % 4) + 4) % 4;
      const auto tag = m == 0 ? forms::NameTag::VecZ2 : m == 2 ? forms::NameTag::sVec : forms::NameTag::Vec;
      REQUIRE(r.name);
      CHECK(r.name->tag == tag);
    }
  for (int k = -16; k <= 16; ++k) {
    const auto r = quotient_centre(so3(k));
    CHECK(r.descends == (k % 4 == 0));
    if (r.descends) CHECK(r.name->tag == forms::NameTag::Vec);
  }
}

TEST_CASE("Z-perp: SO(4) membership follows the parity of k_l") {
  for (int kl = -6; kl <= 6; ++kl) {
    const int kr = 4 - kl;
    const auto s = so4(kl, kr);
    const auto cover = cover_centre(s);
    const auto lift = lift_kernel(s, cover);
    const auto perp = z_perp(cover, lift.generators);
    const Element left = cover.finite.group().reduce(std::vector<Integer>{1, 0});
    const bool in_perp = std::find(perp.finite_elements.begin(), perp.finite_elements.end(), left) !=
                         perp.finite_elements.end();
    CHECK(in_perp == (kl % 2 == 0));
  }
  const auto s = so3(4);
  const auto cover = cover_centre(s);
  CHECK(z_perp(cover, lift_kernel(s, cover).generators).finite_elements.size() == 2);
  CHECK_THROWS_AS(z_perp(cover_centre(so3(1)), lift_kernel(so3(1), cover_centre(so3(1))).generators), DomainError);
}

TEST_CASE("abstract Z-perp quotient agrees with the elementwise construction") {
  std::vector<std::pair<forms::QForm, std::vector<Element>>> cases;
  for (int kl = -4; kl <= 4; ++kl) cases.push_back({cover_centre(so4(kl, 4 - kl)).finite, {Element{1, 1}}});
  cases.push_back({sc_centre({Series::A, 7}, 4), {Element{2}}});
  cases.push_back({sc_centre({Series::A, 7}, 1), {Element{4}}});
  cases.push_back({sc_centre({Series::D, 4}, 2), {Element{1, 0}}});
  cases.push_back({sc_centre({Series::A, 3}, 2), {Element{2}}});
  for (const auto& [q, z] : cases) {
    if (!forms::vanishes_on(q, z)) continue;
    const auto sub = forms::perp_quotient(q, z);
    CHECK(forms::iso_forms(sub.form, elementwise_quotient(q, z)));
    bool holds = false;
    CHECK(forms::coset_invariance_checked(q, z, holds));
    CHECK(holds);
  }
}

TEST_CASE("nested quotients compose") {
  // ℤ/8 → ℤ/8/⟨4⟩ → (ℤ/8/⟨4⟩)/⟨2⟩ against ℤ/8/⟨2⟩ directly
  GroupSpec a7;
  a7.simples = {{{Series::A, 7}, 4}};
  auto by4 = a7, by2 = a7;
  by4.kernel = {{{}, {{Integer(4)}}}};
  by2.kernel = {{{}, {{Integer(2)}}}};
  const auto direct = quotient_centre(by2);
  const auto first = quotient_centre(by4);
  REQUIRE(direct.centre);
  REQUIRE(first.centre);
  const auto q = sc_centre({Series::A, 7}, 4);
  const auto step = forms::perp_quotient(q, {Element{4}});
  const auto image = step.project(q.group(), Element{2});
  const auto second = forms::perp_quotient(step.form, {image});
  CHECK(forms::iso_forms(second.form, direct.centre->finite));
  CHECK(forms::iso_forms(step.form, first.centre->finite));
  CHECK(direct.name->tag == forms::NameTag::SemiBar);
}

TEST_CASE("mixed torus and simple factor: U(2)") {
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 6; ++k) {
      const auto s = u2(j, k);
      const auto r = quotient_centre(s);
      // independent path: q of the torus point (λ, x) = (j, 1/2) plus q of the SU(2) generator
      const auto tl = *s.torus;
      const QZ expected = torus::torus_q(tl, {{Integer(j)}, {Rational(1, 2)}}) + sc_centre(kA1, k).diag()[0];
      REQUIRE(r.kernel_values.size() == 1);
      CHECK(r.kernel_values[0] == expected);
      CHECK(r.descends == expected.is_zero());
      CHECK(r.descends == ((j + k) % 4 == 0));
      if (r.descends) {
        CHECK(r.centre->vector_dim == 1);
        CHECK_FALSE(r.name);
      }
    }
}

TEST_CASE("loop-group comparison flags") {
  GroupSpec su2;
  su2.simples = {{kA1, 3}};
  auto f = loopgroup_flags(su2);
  CHECK(f.applicable);
  CHECK(f.statement == "computed centre equals (Rep^k LG)^x as a braided 2-group");

  GroupSpec e8;
  e8.simples = {{{Series::E, 8}, 2}};
  f = loopgroup_flags(e8);
  CHECK(f.e8_level2);
  CHECK_FALSE(f.applicable);
  CHECK(f.statement.starts_with("excluded"));

  CHECK(loopgroup_flags(u2(1, 3)).statement == "not applicable (non-semisimple)");
  GroupSpec neg;
  neg.simples = {{kA1, -1}};
  CHECK(loopgroup_flags(neg).statement == "not applicable (level not positive-definite)");
}

TEST_CASE("table flags for the discrepant rows") {
  GroupSpec c3;
  c3.simples = {{{Series::C, 3}, 1}};
  const auto r = quotient_centre(c3);
  REQUIRE_FALSE(r.table_flags.empty());
  CHECK(r.table_flags[0] == "C3 k=1: q(ω3) formula 3/4, table 1/2");
  GroupSpec c4;
  c4.simples = {{{Series::C, 4}, 1}};
  CHECK(quotient_centre(c4).table_flags.empty());
}

TEST_CASE("spec validation names the field") {
  GroupSpec s;
  s.simples = {{{Series::B, 1}, 1}};
  CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("simples[0].rank"), DomainError);
  auto t = so4(1, 1);
  t.kernel[0].simples.pop_back();
  CHECK_THROWS_WITH_AS(t.validate(), doctest::Contains("kernel[0].simples"), DomainError);
  auto u = u2(1, 1);
  u.kernel[0].torus.push_back(Rational(1, 3));
  CHECK_THROWS_WITH_AS(u.validate(), doctest::Contains("kernel[0].torus"), DomainError);
}
