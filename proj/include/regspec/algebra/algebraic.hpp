#pragma once

#include <compare>
#include <string>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/algebra/polynomial.hpp"
#include "regspec/algebra/roots.hpp"

namespace regspec {

/// Exact real algebraic integer.
///
/// Three canonical shapes:
///   Integer    z
///   Quadratic  (a + sign*sqrt(b)) / 2 where x^2 - a x + (a^2 - b)/4 is the
///              minimal polynomial, so b is its discriminant (b > 0, not a
///              square, a^2 = b mod 4). b is not reduced: sqrt(2) = (0+sqrt(8))/2.
///   Isolated   the unique root of a monic squarefree polynomial of degree
///              >= 3 without rational roots inside an open interval (lo, hi).
/// Equal values always have equal representations when the polynomial is
/// irreducible, so the defaulted member comparison is not exposed; use
/// compare().
class AlgebraicNumber {
 public:
  enum class Kind { Integer, Quadratic, Isolated };

  AlgebraicNumber() : AlgebraicNumber(Integer(0)) {}
  AlgebraicNumber(Integer z);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long z) : AlgebraicNumber(Integer(z)) {}  // NOLINT(google-explicit-constructor)

  static AlgebraicNumber quadratic(const Integer& a, const Integer& b, int sign);
  static AlgebraicNumber isolated(const IntPolynomial& poly, const RationalInterval& iv);

  /// All real roots of a monic polynomial without repeated or rational roots
  /// (any monic polynomial of degree <= 1 is fine), ascending.
  static std::vector<AlgebraicNumber> roots_of(const IntPolynomial& poly);

  Kind kind() const noexcept { return kind_; }
  bool is_integer() const noexcept { return kind_ == Kind::Integer; }

  const Integer& value() const;  // Integer kind
  const Integer& a() const;      // Quadratic kind
  const Integer& b() const;
  int sign() const;
  const IntPolynomial& poly() const;  // Isolated kind
  const RationalInterval& interval() const;

  /// Monic polynomial of this number: x - z, the quadratic, or the stored one.
  IntPolynomial defining_polynomial() const;
  /// Open rational interval isolating this number among the roots of
  /// defining_polynomial(); a point for integers.
  RationalInterval enclosure() const;

  /// Display approximation only.
  double approx() const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Integer;
  Integer z_;  // integer value, or a
  Integer b_;
  int sign_ = 1;
  IntPolynomial poly_;
  RationalInterval iv_;
};

std::strong_ordering compare(const AlgebraicNumber& x, const AlgebraicNumber& y);
std::strong_ordering compare_to_rational(const AlgebraicNumber& x, const Rational& q);

inline bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y); }

/// scale * x + shift, scale != 0.
AlgebraicNumber affine_map(const AlgebraicNumber& x, const Integer& scale, const Integer& shift);

/// p(x) = 0, exactly.
bool is_root_of(const AlgebraicNumber& x, const IntPolynomial& p);

}  // namespace regspec
