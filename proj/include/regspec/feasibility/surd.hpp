#pragma once

#include <string>

#include "regspec/algebra/algebraic.hpp"
#include "regspec/algebra/bigint.hpp"

namespace regspec {

/// x + y sqrt(d) with rational x, y and an integer d >= 0; square factors of
/// d below 10^10 are moved into y on construction. Binary operations
/// need equal d whenever both y are nonzero (Error InvalidArgument otherwise).
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational x) : x_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long x) : x_(x) {}                  // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational x, Rational y, Integer d);

  /// Integer or Quadratic algebraic numbers; Error InvalidArgument for
  /// Isolated ones.
  static QuadraticSurd from_algebraic(const AlgebraicNumber& a);

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Integer& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return y_ == 0; }
  bool is_integer() const noexcept { return y_ == 0 && regspec::is_integer(x_); }
  /// x; only meaningful when is_rational().
  const Rational& rational() const noexcept { return x_; }
  int sign() const;
  QuadraticSurd conjugate() const { return reduced(x_, -y_, d_); }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const Rational& q);
  QuadraticSurd operator-() const { return reduced(-x_, -y_, d_); }
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() == 0; }

  /// "3/2", "-1/2+1/2*sqrt(11)".
  std::string to_string() const;

 private:
  Rational x_, y_;
  Integer d_;
  // d already free of the square factors trial division would find
  static QuadraticSurd reduced(Rational x, Rational y, Integer d);
  void normalize();
};

}  // namespace regspec
