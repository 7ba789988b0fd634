#include "drinfeld/torus_centre.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld::torus {

namespace {

void check_square(const IntMatrix& j) {
  if (j.rows() != j.cols()) throw DomainError("J must be square");
}

void check_point(const TorusLevel& tl, const TorusPoint& p, const Integer& bound) {
  if (p.lambda.size() != tl.rank() || p.x.size() != tl.rank())
    throw DomainError("torus point has the wrong dimension");
  for (const auto& v : p.x)
    if (v.get_den() > bound)
      throw DomainError("coordinate " + v.get_str() + " exceeds the denominator bound " + bound.get_str());
}

}  // namespace

IntMatrix TorusLevel::form() const {
  check_square(J);
  IntMatrix i(rank(), rank());
  for (std::size_t a = 0; a < rank(); ++a)
    for (std::size_t b = 0; b < rank(); ++b) i(a, b) = -(J(a, b) + J(b, a));
  return i;
}

bool TorusLevel::positive_definite() const { return is_positive_definite(to_rational(form())); }

centre::TorusPart torus_part(const TorusLevel& tl) {
  centre::TorusPart t;
  t.J = tl.J;
  t.I = tl.form();
  t.smith = lattice::snf(t.I);
  const auto u_inv = inverse(to_rational(t.smith.U));
  const auto v_inv = inverse(to_rational(t.smith.V));
  t.U_inv = IntMatrix(tl.rank(), tl.rank());
  t.V_inv = IntMatrix(tl.rank(), tl.rank());
  for (std::size_t a = 0; a < tl.rank(); ++a)
    for (std::size_t b = 0; b < tl.rank(); ++b) {
      t.U_inv(a, b) = u_inv(a, b).get_num();
      t.V_inv(a, b) = v_inv(a, b).get_num();
    }
  for (std::size_t j = 0; j < t.smith.rank; ++j)
    if (t.smith.diagonal(j) > 1) t.finite_index.push_back(j);
  return t;
}

centre::StructuredCentre torus_pi0(const TorusLevel& tl) {
  const auto part = torus_part(tl);
  const std::size_t rho = part.coimage_rank();
  const std::size_t ker = part.kernel_rank();
  return centre::atom_centre(part, rho, ker, ker);
}

QZ torus_braiding(const TorusLevel& tl, const TorusPoint& p, const TorusPoint& p2, const Integer& bound) {
  check_square(tl.J);
  check_point(tl, p, bound);
  check_point(tl, p2, bound);
  Rational acc = 0;
  for (std::size_t i = 0; i < tl.rank(); ++i) {
    acc += Rational(p.lambda[i]) * p2.x[i];
    for (std::size_t j = 0; j < tl.rank(); ++j) acc += p2.x[i] * Rational(tl.J(i, j)) * p.x[j];
  }
  return QZ(acc);
}

QZ torus_q(const TorusLevel& tl, const TorusPoint& p, const Integer& bound) {
  return torus_braiding(tl, p, p, bound);
}

TorusPoint pi_translate(const TorusLevel& tl, std::span<const Integer> pi) {
  if (pi.size() != tl.rank()) throw DomainError("cocharacter has the wrong dimension");
  const IntMatrix i = tl.form();
  TorusPoint out;
  out.lambda = i.apply(pi);
  out.x.assign(pi.begin(), pi.end());
  return out;
}

}  // namespace drinfeld::torus
