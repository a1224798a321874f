#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regspec/algebra/bigint.hpp"

namespace regspec {

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. The coefficient vector never carries a zero leading term;
/// the zero polynomial has an empty vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  /// x - r
  static IntPolynomial linear_root(const Integer& r);
  /// x^d
  static IntPolynomial monomial(std::size_t d);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& x) const;
  /// Sign of p(q), computed without leaving the integers.
  int sign_at(const Rational& q) const;
  Rational evaluate(const Rational& q) const;

  IntPolynomial derivative() const;
  Integer content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;
  IntPolynomial negated() const;

  /// p(scale * x + shift), exact.
  IntPolynomial compose_affine(const Integer& scale, const Integer& shift) const;

  std::string to_string(std::string_view var = "x") const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

/// Quotient and remainder when the divisor is monic (so both stay integral).
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when b divides a in Z[x]; throws Error(InvalidArgument) otherwise.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b, with the multiplier's sign forced
/// positive so sign sequences are preserved.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace regspec
