#include "drinfeld/qz.hpp"

#include <cctype>

namespace drinfeld {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

QZ::QZ(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  den_ = c.get_den();
  num_ = c.get_num() - floor_div(c.get_num(), den_) * den_;
  if (num_ == 0) den_ = 1;
}

QZ qz(const Integer& n, const Integer& d) {
  if (d == 0) throw DomainError("qz: zero denominator");
  return QZ(Rational(n, d));
}

QZ QZ::operator-() const { return QZ(Rational(-num_, den_)); }

QZ& QZ::operator+=(const QZ& o) {
  *this = QZ(representative() + o.representative());
  return *this;
}

QZ& QZ::operator-=(const QZ& o) {
  *this = QZ(representative() - o.representative());
  return *this;
}

QZ operator*(const Integer& n, const QZ& a) { return QZ(Rational(n * a.num_, a.den_)); }

std::strong_ordering operator<=>(const QZ& a, const QZ& b) {
  const int c = cmp(a.representative(), b.representative());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QZ::str() const {
  if (num_ == 0) return "0";
  return num_.get_str() + "/" + den_.get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_int(num)) throw DomainError("not an exact rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_int(num));
  const std::string_view den = text.substr(slash + 1);
  if (!valid_int(den)) throw DomainError("not an exact rational: '" + std::string(text) + "'");
  const Integer d = to_int(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(to_int(num), d);
  r.canonicalize();
  return r;
}

QZ QZ::parse(std::string_view text) { return QZ(parse_rational(text)); }

}  // namespace drinfeld
