#include "regspec/feasibility/surd.hpp"

#include "regspec/error.hpp"

namespace regspec {

QuadraticSurd::QuadraticSurd(Rational x, Rational y, Integer d) : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
  if (d_ < 0) throw Error(Errc::InvalidArgument, "QuadraticSurd: negative radicand");
  if (y_ != 0 && d_ != 0) {
    // pull out square factors found by trial division
    for (Integer p = 2; p * p <= d_ && p < 100000; ++p) {
      const Integer sq = p * p;
      while (divides(sq, d_)) {
        d_ /= sq;
        y_ *= Rational(p);
      }
    }
  }
  normalize();
}

QuadraticSurd QuadraticSurd::reduced(Rational x, Rational y, Integer d) {
  QuadraticSurd r;
  r.x_ = std::move(x);
  r.y_ = std::move(y);
  r.d_ = std::move(d);
  r.normalize();
  return r;
}

void QuadraticSurd::normalize() {
  if (y_ == 0 || d_ == 0) {
    y_ = 0;
    d_ = 0;
    return;
  }
  if (is_perfect_square(d_)) {
    x_ += y_ * Rational(isqrt(d_));
    y_ = 0;
    d_ = 0;
  }
}

QuadraticSurd QuadraticSurd::from_algebraic(const AlgebraicNumber& a) {
  switch (a.kind()) {
    case AlgebraicNumber::Kind::Integer:
      return QuadraticSurd(Rational(a.value()));
    case AlgebraicNumber::Kind::Quadratic:
      return {fraction(a.a(), 2), fraction(a.sign(), 2), a.b()};
    case AlgebraicNumber::Kind::Isolated:
      break;
  }
  throw Error(Errc::InvalidArgument, "QuadraticSurd: " + a.to_string() + " is not quadratic");
}

namespace {

Integer common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational() || a.d() == b.d()) return a.d();
  throw Error(Errc::InvalidArgument, "QuadraticSurd: mixed radicands " + a.to_string() + ", " + b.to_string());
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  return QuadraticSurd::reduced(a.x_ + b.x_, a.y_ + b.y_, common_radicand(a, b));
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Integer d = common_radicand(a, b);
  return QuadraticSurd::reduced(a.x_ * b.x_ + a.y_ * b.y_ * Rational(d), a.x_ * b.y_ + a.y_ * b.x_, d);
}

QuadraticSurd operator/(const QuadraticSurd& a, const Rational& q) {
  if (q == 0) throw Error(Errc::InvalidArgument, "QuadraticSurd: division by zero");
  return QuadraticSurd::reduced(a.x_ / q, a.y_ / q, a.d_);
}

int QuadraticSurd::sign() const {
  const int sx = regspec::sign(x_), sy = regspec::sign(y_);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: compare x^2 with y^2 d
  const Rational diff = x_ * x_ - y_ * y_ * Rational(d_);
  return regspec::sign(diff) * sx;
}

std::string QuadraticSurd::to_string() const {
  if (y_ == 0) return regspec::to_string(x_);
  std::string out = x_ == 0 ? "" : regspec::to_string(x_);
  if (y_ > 0 && !out.empty()) out += "+";
  out += regspec::to_string(y_) + "*sqrt(" + regspec::to_string(d_) + ")";
  return out;
}

}  // namespace regspec
