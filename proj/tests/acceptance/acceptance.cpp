#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "drinfeld/discrete_oracle.hpp"
#include "drinfeld/presentation.hpp"
#include "drinfeld/report.hpp"
#include "drinfeld/spec_document.hpp"
#include "drinfeld/string_centre.hpp"
#include "drinfeld/table1.hpp"

using namespace drinfeld;
using roots::Series;
using roots::SimpleType;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_ms;  // 0 = no runtime bound
  std::function<Verdict()> body;
};

const SimpleType kA1{Series::A, 1};

std::string label(const SimpleType& t, int k) { return t.str() + " k=" + std::to_string(k); }

centre::GroupSpec single(const SimpleType& t, int k) {
  centre::GroupSpec s;
  s.simples = {{t, k}};
  return s;
}

centre::GroupSpec so4(int kl, int kr) {
  centre::GroupSpec s;
  s.simples = {{kA1, kl}, {kA1, kr}};
  s.kernel = {{{}, {{Integer(1)}, {Integer(1)}}}};
  return s;
}

// Printed rows of the centre table, written out independently of the library.
std::vector<QZ> table_row(const SimpleType& t, int k) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
      return {qz(k * n, 2 * (n + 1))};
    case Series::B:
      return {qz(k, 2)};
    case Series::D:
      if (n % 2 == 1) return {qz(k * n, 8)};
      return {qz(k * (n / 2), 4), qz(k * (n / 2), 4), qz(k, 2)};
    case Series::E:
      return {qz(2 * k, 3)};
    default:
      return {};
  }
}

std::vector<QZ> computed_row(const SimpleType& t, int k) {
  const auto q = centre::sc_centre(t, k);
  std::vector<QZ> out = q.diag();
  if (t.series == Series::D && t.rank % 2 == 0) out.push_back(q(Element{1, 1}));
  return out;
}

// q(na) = n²q(a) and bilinearity of σ, exhaustively.
bool homogeneous_and_bilinear(const forms::QForm& q) {
  const auto& g = q.group();
  const auto elems = g.elements();
  const long e = g.exponent().get_si();
  for (const auto& a : elems)
    for (long n = 0; n <= e; ++n)
      if (q(g.scale(n, a)) != Integer(n * n) * q(a)) return false;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const QZ ab = q.sigma(a, b);
      if (ab != q.sigma(b, a)) return false;
      for (const auto& c : elems)
        if (q.sigma(g.add(a, b), c) != q.sigma(a, c) + q.sigma(b, c)) return false;
    }
  return true;
}

Verdict table_consistent_rows() {
  Verdict v;
  std::vector<SimpleType> types;
  for (int n = 2; n <= 8; ++n) types.push_back({Series::A, n - 1});
  for (int n = 2; n <= 6; ++n) types.push_back({Series::B, n});
  for (int n = 3; n <= 8; ++n) types.push_back({Series::D, n});
  types.push_back({Series::E, 6});
  int cells = 0;
  for (const auto& t : types)
    for (int k = 1; k <= 6; ++k) {
      const auto want = table_row(t, k);
      const auto got = computed_row(t, k);
      v.require(want == got, label(t, k) + " differs from the table");
      for (const auto& c : table1::cells(t, k)) v.require(c.match(), label(t, k) + " table1 report flags a row");
      cells += static_cast<int>(want.size());
    }
  if (v.pass) v.detail = std::to_string(cells) + " cells match";
  return v;
}

Verdict table_discrepancies() {
  Verdict v;
  int flagged = 0, rows_with_flags = 0;
  std::vector<SimpleType> types;
  for (int n = 2; n <= 6; ++n) types.push_back({Series::C, n});
  types.push_back({Series::E, 7});
  for (const auto& t : types) {
    bool row_flagged = false;
    for (int k = 1; k <= 6; ++k) {
      const auto result = centre::quotient_centre(single(t, k));
      const std::set<std::string> flags(result.table_flags.begin(), result.table_flags.end());
      for (const auto& c : table1::cells(t, k)) {
        // theorem value: C_n gives kn/4 on ω_n, E7 gives 3k/4 on ω7
        const QZ theorem = t.series == Series::C ? qz(k * t.rank, 4) : qz(3 * k, 4);
        v.require(c.computed == theorem, label(t, k) + " computed value is not the theorem value");
        if (!c.match()) {
          v.require(flags.contains(c.flag_text()), label(t, k) + " mismatch not flagged");
          ++flagged;
          row_flagged = true;
        }
      }
    }
    // C4 agrees with the printed row at every level; every other row must flag
    if (!(t.series == Series::C && t.rank == 4)) v.require(row_flagged, t.str() + " row carries no flag");
    rows_with_flags += row_flagged;
  }
  for (int k = 1; k <= 6; ++k)
    v.require(forms::iso_forms(centre::sc_centre({Series::C, 2}, k), centre::sc_centre({Series::B, 2}, k)),
              "C2 computed values fail the B2 arbiter");
  if (v.pass)
    v.detail = std::to_string(flagged) + " flags over " + std::to_string(rows_with_flags) +
               " rows (C4 matches the table)";
  return v;
}

Verdict exceptional_isomorphisms() {
  Verdict v;
  for (int k = 0; k <= 6; ++k) {
    v.require(forms::iso_forms(centre::sc_centre({Series::B, 2}, k), centre::sc_centre({Series::C, 2}, k)),
              "B2/C2 k=" + std::to_string(k));
    v.require(forms::iso_forms(centre::sc_centre({Series::A, 3}, k), centre::sc_centre({Series::D, 3}, k)),
              "A3/D3 k=" + std::to_string(k));
  }
  if (v.pass) v.detail = "B2≅C2 and A3≅D3 for k=0..6";
  return v;
}

Verdict su2_names() {
  Verdict v;
  const char* names[] = {"VecZ2", "Semi", "sVec", "SemiBar"};
  for (int k = 0; k <= 12; ++k) {
    const auto r = centre::quotient_centre(single(kA1, k));
    v.require(r.name && r.name->str() == names[k % 4], "SU(2) k=" + std::to_string(k));
  }
  if (v.pass) v.detail = "k=0..12";
  return v;
}

Verdict so4_grid() {
  Verdict v;
  int descended = 0;
  for (int kl = -8; kl <= 8; ++kl)
    for (int kr = -8; kr <= 8; ++kr) {
      const auto r = centre::quotient_centre(so4(kl, kr));
      const std::string where = "(" + std::to_string(kl) + "," + std::to_string(kr) + ")";
      const bool expect = ((kl + kr) % 4 + 4) % 4 == 0;
      v.require(r.descends == expect, "descent wrong at " + where);
      if (!r.descends) continue;
      ++descended;
      const int m = ((kl % 4) + 4) % 4;
      const std::string name = m == 0 ? "VecZ2" : m == 2 ? "sVec" : "Vec";
      v.require(r.name && r.name->str() == name, "name wrong at " + where);
    }
  if (v.pass) v.detail = "289 cells, " + std::to_string(descended) + " descend";
  return v;
}

Verdict trivial_centres() {
  Verdict v;
  for (auto t : {SimpleType{Series::E, 8}, SimpleType{Series::F, 4}, SimpleType{Series::G, 2}})
    for (int k = 1; k <= 3; ++k) {
      const auto r = io::run(single(t, k));
      v.require(r.descends && r.name == "Vec", label(t, k) + " not Vec");
      const bool excluded = t.series == Series::E && k == 2;
      v.require(r.loopgroup.e8_level2 == excluded, label(t, k) + " exclusion flag");
      if (excluded)
        v.require(r.loopgroup.statement.find("E8 at level 2") != std::string::npos, "exclusion statement missing");
    }
  if (v.pass) v.detail = "E8, F4, G2 at k=1..3; E8 k=2 excluded";
  return v;
}

Verdict qform_counts() {
  Verdict v;
  for (long n = 1; n <= 50; ++n) {
    const auto count = forms::enumerate_qforms(n).size();
    v.require(count == static_cast<std::size_t>(n % 2 ? n : 2 * n), "|Quad(Z/" + std::to_string(n) + ")|");
    v.require(forms::soft_h3_order(n) == (n % 2 ? 1 : 2), "soft H3 order at n=" + std::to_string(n));
  }
  if (v.pass) v.detail = "n=1..50";
  return v;
}

Verdict categorical_torus() {
  Verdict v;
  for (int k = 1; k <= 4; ++k) {
    const torus::TorusLevel tl{IntMatrix{{Integer(-k)}}};
    const auto sc = torus::torus_pi0(tl);
    v.require(sc.finite.group() == FiniteAbGroup::cyclic(2 * k), "finite part of J=-" + std::to_string(k));
    if (!v.pass) break;
    for (int l = 0; l < 2 * k; ++l) {
      const QZ expect = qz(l * l, 4 * k);
      v.require(sc.evaluate(sc.finite_point(Element{l})) == expect, "evaluator at λ=" + std::to_string(l));
      v.require(torus::torus_q(tl, {{Integer(l)}, {Rational(l, 2 * k)}}) == expect, "torus_q at λ=" + std::to_string(l));
      v.require(sc.finite(Element{l}) == expect, "finite form at λ=" + std::to_string(l));
    }
  }
  const auto zero = torus::torus_pi0(torus::TorusLevel{IntMatrix{{0}}});
  const auto mc = centre::max_compact(zero);
  v.require(zero.torus_dim == 1 && mc.torus_dim == 1 && mc.finite.group().is_trivial(), "J=0 compact part");
  if (v.pass) v.detail = "J=-1..-4 swept, J=0 gives T^1";
  return v;
}

forms::QForm hyperbolic(const std::vector<Integer>& d) {
  std::vector<Integer> f;
  for (const auto& x : d) f.insert(f.end(), {x, x});
  forms::QZMatrix off(f.size(), f.size());
  for (std::size_t i = 0; i < d.size(); ++i) off(2 * i, 2 * i + 1) = off(2 * i + 1, 2 * i) = qz(1, d[i]);
  return forms::QForm(FiniteAbGroup(f), std::vector<QZ>(f.size()), off);
}

Verdict oracle_suite() {
  Verdict v;
  const std::vector<std::vector<Integer>> groups = {{2}, {3}, {4}, {2, 2}};
  for (const auto& d : groups) {
    const auto b = oracle::brute_centre(oracle::Cocycle3::zero(FiniteAbGroup(d)));
    v.require(forms::iso_forms(b.form, hyperbolic(d)), FiniteAbGroup(d).str() + " not hyperbolic");
  }
  int checked = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) {
      v.require(oracle::exact_sequence_check(oracle::std_cocycle(n, k)).exact(),
                "exact sequence fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
      ++checked;
    }
  if (v.pass) v.detail = "4 doubles, " + std::to_string(checked) + " cocycles";
  return v;
}

Verdict property_battery() {
  Verdict v;
  std::vector<forms::QForm> produced;
  for (const auto& t : table1::table_types())
    for (int k = 1; k <= 6; ++k) produced.push_back(centre::sc_centre(t, k));
  for (int kl = -4; kl <= 4; ++kl) {
    const auto r = centre::quotient_centre(so4(kl, 4 - kl));
    if (r.centre) produced.push_back(r.centre->finite);
    produced.push_back(centre::cover_centre(so4(kl, 4 - kl)).finite);
  }
  for (int k = 1; k <= 4; ++k) produced.push_back(torus::torus_pi0(torus::TorusLevel{IntMatrix{{Integer(-k)}}}).finite);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < n; ++k) produced.push_back(oracle::brute_centre(oracle::std_cocycle(n, k)).form);
  for (const auto& q : produced) v.require(homogeneous_and_bilinear(q), "law fails on " + q.group().str());

  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> shift(-7, 7);
  for (const auto& t : table1::table_types()) {
    const auto c = roots::centre_of(t);
    for (int k = 1; k <= 6; ++k) {
      const auto q = centre::sc_centre(t, k);
      for (std::size_t g = 0; g < c.lifts.size(); ++g)
        for (int s = 0; s < 20; ++s) {
          auto lift = c.lifts[g];
          for (auto& x : lift) x += shift(rng);
          v.require(QZ(Rational(k, 2) * roots::coweight_norm(t, lift)) == q.diag()[g], "lift dependence " + label(t, k));
        }
    }
  }

  // q(x+z) = q(x) on Z⊥ × Z, checked directly
  std::vector<std::pair<forms::QForm, Element>> quotients;
  for (int kl = -8; kl <= 8; ++kl) quotients.push_back({centre::cover_centre(so4(kl, 4 - kl)).finite, Element{1, 1}});
  quotients.push_back({centre::sc_centre(kA1, 4), Element{1}});
  quotients.push_back({centre::sc_centre({Series::A, 7}, 4), Element{2}});
  for (const auto& [q, z] : quotients) {
    const auto& g = q.group();
    const auto zs = subgroup_elements(g, {z});
    for (const auto& x : g.elements()) {
      bool perp = true;
      for (const auto& y : zs) perp = perp && q.sigma(x, y).is_zero();
      if (!perp) continue;
      for (const auto& y : zs) v.require(q(g.add(x, y)) == q(x), "q not constant on a coset in " + g.str());
    }
  }

  const std::vector<IntMatrix> js = {IntMatrix{{-1}}, IntMatrix{{-3}}, IntMatrix{{0}}, IntMatrix{{-1, 1}, {0, -2}},
                                     IntMatrix{{-1, 0}, {0, 0}}};
  std::uniform_int_distribution<int> num(-50, 50), den(1, 16), lam(-9, 9);
  for (const auto& J : js) {
    const torus::TorusLevel tl{J};
    for (int t = 0; t < 100; ++t) {
      torus::TorusPoint p;
      std::vector<Integer> pi;
      for (std::size_t i = 0; i < J.rows(); ++i) {
        p.lambda.emplace_back(lam(rng));
        Rational x(num(rng), den(rng));
        x.canonicalize();
        p.x.push_back(x);
        pi.emplace_back(lam(rng));
      }
      const auto d = torus::pi_translate(tl, pi);
      auto moved = p;
      for (std::size_t i = 0; i < J.rows(); ++i) {
        moved.lambda[i] += d.lambda[i];
        moved.x[i] += d.x[i];
      }
      v.require(torus::torus_q(tl, moved) == torus::torus_q(tl, p), "Π-translation changes q");
    }
  }
  if (v.pass) v.detail = std::to_string(produced.size()) + " forms, 5 tori x 100 points";
  return v;
}

Verdict mixed_smoke() {
  Verdict v;
  int agree = 0;
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 6; ++k) {
      const std::string doc = R"({"version":1,"torus":{"rank":1,"J":[[)" + std::to_string(-j) +
                              R"(]]},"simples":[{"series":"A","rank":1,"level":)" + std::to_string(k) +
                              R"(}],"kernel":[{"torus":["1/2"],"simples":[[1]]}]})";
      const auto spec = io::parse_spec(doc);
      const auto report = io::run(spec);
      // product formula on the lifted generator (λ, x) = (j, 1/2) ⊕ ω₁:
      // λx + Jx² from the torus, (k/2)·I(ω₁, ω₁) = k/4 from SU(2)
      const Rational x(1, 2);
      const Rational torus_part = Rational(j) * x + Rational(-j) * x * x;
      const QZ direct(torus_part + Rational(k, 4));
      v.require(report.descends == direct.is_zero(), "U(2) J=" + std::to_string(-j) + " k=" + std::to_string(k));
      v.require(report.kernel_values.size() == 1 && report.kernel_values[0] == direct, "kernel value mismatch");
      agree += report.descends;
    }
  if (v.pass) v.detail = "24 levels, " + std::to_string(agree) + " descend; verdicts agree";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 1 consistent rows", 1000, table_consistent_rows},
      {2, "Table 1 discrepancies flagged (C, E7)", 0, table_discrepancies},
      {3, "exceptional isomorphisms B2/C2, A3/D3", 1000, exceptional_isomorphisms},
      {4, "SU(2)_k classification", 0, su2_names},
      {5, "SO(4) descent grid", 0, so4_grid},
      {6, "trivial centres E8, F4, G2", 0, trivial_centres},
      {7, "quadratic form counts n<=50", 1000, qform_counts},
      {8, "categorical torus rank 1", 0, categorical_torus},
      {9, "discrete oracle suite", 30000, oracle_suite},
      {10, "property battery", 10000, property_battery},
      {11, "U(2) mixed smoke test", 0, mixed_smoke},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && c.budget_ms > 0 && ms > c.budget_ms) {
      v.pass = false;
      v.detail = "over the " + std::to_string(static_cast<int>(c.budget_ms)) + " ms budget";
    }
    failed += !v.pass;
    std::printf("%s  [%2d] %-42s %9.1f ms  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), ms,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
