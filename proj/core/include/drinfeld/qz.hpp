#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "drinfeld/matrix.hpp"

namespace drinfeld {

/// An element of ℚ/ℤ, written additively. Always stored as the reduced
/// fraction num/den with 0 <= num < den, so equality is literal equality.
class QZ {
 public:
  QZ() : num_(0), den_(1) {}
  explicit QZ(const Rational& r);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// Representative in [0, 1).
  Rational representative() const { return Rational(num_, den_); }

  QZ operator-() const;
  QZ& operator+=(const QZ& o);
  QZ& operator-=(const QZ& o);
  friend QZ operator+(QZ a, const QZ& b) { return a += b; }
  friend QZ operator-(QZ a, const QZ& b) { return a -= b; }
  friend QZ operator*(const Integer& n, const QZ& a);
  friend QZ operator*(const QZ& a, const Integer& n) { return n * a; }

  friend bool operator==(const QZ&, const QZ&) = default;
  /// Orders by representative in [0, 1); used for value multisets.
  friend std::strong_ordering operator<=>(const QZ& a, const QZ& b);

  /// "p/q", or "0" for the identity.
  std::string str() const;
  /// Parses "p/q" or "p" (any integers, reduced mod 1).
  static QZ parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const QZ& a) { return os << a.str(); }

 private:
  Integer num_;
  Integer den_;
};

/// Reduced representative of n/d mod 1. Throws DomainError when d == 0.
QZ qz(const Integer& n, const Integer& d);

/// Parses an exact rational "p/q" or "p"; throws DomainError on bad text.
Rational parse_rational(std::string_view text);

}  // namespace drinfeld
