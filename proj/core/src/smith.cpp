#include "drinfeld/smith.hpp"

#include <algorithm>

#include "drinfeld/abelian_group.hpp"
#include "drinfeld/errors.hpp"

namespace drinfeld::lattice {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

namespace {

// Replaces rows (p, q) of each matrix by (s·p + t·q, u·p + v·q).
void combine_rows(IntMatrix& a, std::size_t p, std::size_t q, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const Integer x = a(p, c);
    const Integer y = a(q, c);
    a(p, c) = s * x + t * y;
    a(q, c) = u * x + v * y;
  }
}

void combine_cols(IntMatrix& a, std::size_t p, std::size_t q, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Integer x = a(r, p);
    const Integer y = a(r, q);
    a(r, p) = s * x + t * y;
    a(r, q) = u * x + v * y;
  }
}

// Unimodular 2×2 step sending (a, b) to (gcd, 0).
struct Bezout {
  Integer s, t, u, v;
};

Bezout bezout(const Integer& a, const Integer& b) {
  if (b % a == 0) return {1, 0, -(b / a), 1};
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {s, t, -(b / g), a / g};
}

}  // namespace

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Bezout b = bezout(a(t, t), a(i, t));
        combine_rows(a, t, i, b.s, b.t, b.u, b.v);
        combine_rows(u, t, i, b.s, b.t, b.u, b.v);
      }
      bool row_clear = true;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Bezout b = bezout(a(t, t), a(t, j));
        combine_cols(a, t, j, b.s, b.t, b.u, b.v);
        combine_cols(v, t, j, b.s, b.t, b.u, b.v);
        row_clear = false;
      }
      if (!row_clear) {
        bool col_clear = true;
        for (std::size_t i = t + 1; i < rows; ++i) col_clear = col_clear && a(i, t) == 0;
        if (!col_clear) continue;
      }
      // Pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      combine_rows(a, t, bad, 1, 1, 0, 1);
      combine_rows(u, t, bad, 1, 1, 0, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithForm out{std::move(u), std::move(a), std::move(v), t};
#ifndef NDEBUG
  if (!verify_smith(m, out)) throw std::logic_error("snf: post-condition U·M·V = D failed");
#endif
  return out;
}

bool verify_smith(const IntMatrix& m, const SmithForm& s) {
  if (s.U.rows() != m.rows() || s.V.rows() != m.cols()) return false;
  if (abs(determinant(s.U)) != 1 || abs(determinant(s.V)) != 1) return false;
  if (!(s.U * m * s.V == s.D)) return false;
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j && s.D(i, j) != 0) return false;
  const std::size_t n = std::min(s.D.rows(), s.D.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.D(i, i);
    if ((i < s.rank) != (d != 0) || d < 0) return false;
    if (i + 1 < n && d != 0 && s.D(i + 1, i + 1) % d != 0) return false;
  }
  return true;
}

bool CokernelElement::is_zero() const {
  return std::all_of(finite.begin(), finite.end(), [](const Integer& x) { return x == 0; }) &&
         std::all_of(free.begin(), free.end(), [](const Integer& x) { return x == 0; });
}

Cokernel::Cokernel(const IntMatrix& m, std::size_t ambient_rank)
    : smith_(snf(m.cols() == 0 ? IntMatrix(ambient_rank, 0) : m)), ambient_(ambient_rank) {
  if (m.rows() != ambient_rank && m.cols() != 0)
    throw DomainError("cokernel: matrix rows do not match the ambient rank");
  for (std::size_t i = 0; i < smith_.rank; ++i)
    if (smith_.D(i, i) > 1) {
      finite_index_.push_back(i);
      factors_.push_back(smith_.D(i, i));
    }
  free_rank_ = ambient_ - smith_.rank;
}

FiniteAbGroup Cokernel::finite() const { return FiniteAbGroup(factors_); }

CokernelElement Cokernel::project(std::span<const Integer> v) const {
  const std::vector<Integer> w = smith_.U.apply(v);
  CokernelElement out;
  for (std::size_t k = 0; k < finite_index_.size(); ++k) out.finite.push_back(mod(w[finite_index_[k]], factors_[k]));
  for (std::size_t i = smith_.rank; i < ambient_; ++i) out.free.push_back(w[i]);
  return out;
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const RatMatrix inv = inverse(to_rational(u));
  IntMatrix out(u.rows(), u.cols());
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (inv(r, c).get_den() != 1) throw std::logic_error("matrix is not unimodular");
      out(r, c) = inv(r, c).get_num();
    }
  return out;
}

}  // namespace

std::vector<std::vector<Integer>> Cokernel::finite_generator_preimages() const {
  const IntMatrix uinv = unimodular_inverse(smith_.U);
  std::vector<std::vector<Integer>> out;
  for (std::size_t i : finite_index_) out.push_back(uinv.col(i));
  return out;
}

IntMatrix saturate(const IntMatrix& l) {
  const SmithForm s = snf(l);
  return unimodular_inverse(s.U).col_block(0, s.rank);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const SmithForm s = snf(m);
  return s.V.col_block(s.rank, m.cols() - s.rank);
}

bool in_column_span(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.rows()) throw DomainError("in_column_span: dimension mismatch");
  if (m.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  const SmithForm s = snf(m);
  const std::vector<Integer> w = s.U.apply(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < s.rank) {
      if (w[i] % s.D(i, i) != 0) return false;
    } else if (w[i] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix lattice_basis(const IntMatrix& l) {
  const SmithForm s = snf(l);
  if (s.rank != l.rows()) throw DomainError("lattice_basis: generators do not span a full-rank lattice");
  IntMatrix basis = unimodular_inverse(s.U);
  for (std::size_t c = 0; c < basis.cols(); ++c)
    for (std::size_t r = 0; r < basis.rows(); ++r) basis(r, c) *= s.D(c, c);
  return basis;
}

}  // namespace drinfeld::lattice
