#include "regspec/algebra/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "regspec/error.hpp"

namespace regspec {

namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering reverse(std::strong_ordering o) {
  if (o < 0) return std::strong_ordering::greater;
  if (o > 0) return std::strong_ordering::less;
  return o;
}

// The Isolated-kind view of a non-integer: squarefree polynomial and interval.
struct View {
  IntPolynomial poly;
  RationalInterval iv;
};

View view_of(const AlgebraicNumber& x) { return {x.defining_polynomial(), x.enclosure()}; }

void halve(View& v) { v.iv = refine_root(v.poly, v.iv, v.iv.width() / 2); }

bool root_in(const IntPolynomial& g, const Rational& lo, const Rational& hi) {
  return SturmSequence(g).count_in_open(lo, hi) > 0;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(Integer z) : kind_(Kind::Integer), z_(std::move(z)) {}

AlgebraicNumber AlgebraicNumber::quadratic(const Integer& a, const Integer& b, int sign) {
  if (b <= 0 || is_perfect_square(b)) {
    throw Error(Errc::InvalidArgument, "quadratic: b must be a positive non-square");
  }
  if (!divides(4, a * a - b)) throw Error(Errc::InvalidArgument, "quadratic: a^2 != b (mod 4)");
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "quadratic: sign must be +1 or -1");
  AlgebraicNumber x;
  x.kind_ = Kind::Quadratic;
  x.z_ = a;
  x.b_ = b;
  x.sign_ = sign;
  return x;
}

AlgebraicNumber AlgebraicNumber::isolated(const IntPolynomial& poly, const RationalInterval& iv) {
  if (!poly.is_monic() || poly.degree() < 3) {
    throw Error(Errc::InvalidArgument, "isolated: polynomial must be monic of degree >= 3");
  }
  if (!(iv.lo < iv.hi) || poly.sign_at(iv.lo) == 0 || poly.sign_at(iv.hi) == 0 ||
      SturmSequence(poly).count_in_open(iv.lo, iv.hi) != 1) {
    throw Error(Errc::InvalidArgument, "isolated: interval does not isolate a single root");
  }
  AlgebraicNumber x;
  x.kind_ = Kind::Isolated;
  x.poly_ = poly;
  x.iv_ = iv;
  return x;
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const IntPolynomial& poly) {
  if (!poly.is_monic()) throw Error(Errc::InvalidArgument, "roots_of: polynomial must be monic");
  std::vector<AlgebraicNumber> out;
  switch (poly.degree()) {
    case 0:
      return out;
    case 1:
      out.emplace_back(Integer(-poly.coefficient(0)));
      return out;
    case 2: {
      const Integer p = poly.coefficient(1);
      const Integer disc = p * p - 4 * poly.coefficient(0);
      if (disc < 0) return out;
      if (is_perfect_square(disc)) throw Error(Errc::InvalidArgument, "roots_of: quadratic has rational roots");
      out.push_back(quadratic(-p, disc, -1));
      out.push_back(quadratic(-p, disc, 1));
      return out;
    }
    default:
      for (const auto& iv : isolate_real_roots(poly)) {
        if (iv.is_point()) throw Error(Errc::InvalidArgument, "roots_of: polynomial has rational roots");
        out.push_back(isolated(poly, iv));
      }
      return out;
  }
}

const Integer& AlgebraicNumber::value() const {
  if (kind_ != Kind::Integer) throw Error(Errc::InvalidArgument, "value() on a non-integer");
  return z_;
}
const Integer& AlgebraicNumber::a() const {
  if (kind_ != Kind::Quadratic) throw Error(Errc::InvalidArgument, "a() on a non-quadratic");
  return z_;
}
const Integer& AlgebraicNumber::b() const {
  if (kind_ != Kind::Quadratic) throw Error(Errc::InvalidArgument, "b() on a non-quadratic");
  return b_;
}
int AlgebraicNumber::sign() const {
  if (kind_ != Kind::Quadratic) throw Error(Errc::InvalidArgument, "sign() on a non-quadratic");
  return sign_;
}
const IntPolynomial& AlgebraicNumber::poly() const {
  if (kind_ != Kind::Isolated) throw Error(Errc::InvalidArgument, "poly() on a non-isolated root");
  return poly_;
}
const RationalInterval& AlgebraicNumber::interval() const {
  if (kind_ != Kind::Isolated) throw Error(Errc::InvalidArgument, "interval() on a non-isolated root");
  return iv_;
}

IntPolynomial AlgebraicNumber::defining_polynomial() const {
  switch (kind_) {
    case Kind::Integer:
      return IntPolynomial::linear_root(z_);
    case Kind::Quadratic: {
      // x^2 - a x + (a^2 - b)/4
      Integer c = z_ * z_ - b_;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 4);
      return IntPolynomial(std::vector<Integer>{c, Integer(-z_), Integer(1)});
    }
    case Kind::Isolated:
      return poly_;
  }
  return {};
}

RationalInterval AlgebraicNumber::enclosure() const {
  switch (kind_) {
    case Kind::Integer:
      return {Rational(z_), Rational(z_)};
    case Kind::Quadratic: {
      // floor(sqrt b) < sqrt b < floor(sqrt b) + 1
      const Integer s = isqrt(b_);
      Rational lo, hi;
      if (sign_ > 0) {
        lo = Rational(Integer(z_ + s), Integer(2));
        hi = Rational(Integer(z_ + s + 1), Integer(2));
      } else {
        lo = Rational(Integer(z_ - s - 1), Integer(2));
        hi = Rational(Integer(z_ - s), Integer(2));
      }
      lo.canonicalize();
      hi.canonicalize();
      return {lo, hi};
    }
    case Kind::Isolated:
      return iv_;
  }
  return {};
}

double AlgebraicNumber::approx() const {
  switch (kind_) {
    case Kind::Integer:
      return z_.get_d();
    case Kind::Quadratic:
      return (z_.get_d() + sign_ * std::sqrt(b_.get_d())) / 2.0;
    case Kind::Isolated: {
      const RationalInterval r = refine_root(poly_, iv_, Rational(1, 1ul << 40));
      Rational mid = (r.lo + r.hi) / 2;
      return mid.get_d();
    }
  }
  return 0.0;
}

std::string AlgebraicNumber::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Integer:
      os << z_.get_str();
      break;
    case Kind::Quadratic:
      os << '(' << z_.get_str() << (sign_ > 0 ? "+" : "-") << "sqrt(" << b_.get_str() << "))/2";
      break;
    case Kind::Isolated:
      os << "root(" << poly_.to_string() << ", " << iv_.lo.get_str() << ", " << iv_.hi.get_str() << ')';
      break;
  }
  return os.str();
}

std::strong_ordering compare_to_rational(const AlgebraicNumber& x, const Rational& q) {
  switch (x.kind()) {
    case AlgebraicNumber::Kind::Integer:
      return from_sign(cmp(Rational(x.value()), q));
    case AlgebraicNumber::Kind::Quadratic: {
      // (a + s sqrt b)/2 vs q  <=>  s sqrt b vs t = 2q - a
      const Rational t = 2 * q - Rational(x.a());
      auto sqrt_b_vs = [&](const Rational& u) {
        if (u < 0) return std::strong_ordering::greater;
        const Rational u2 = u * u;
        return from_sign(cmp(Rational(x.b()), u2));
      };
      return x.sign() > 0 ? sqrt_b_vs(t) : reverse(sqrt_b_vs(-t));
    }
    case AlgebraicNumber::Kind::Isolated: {
      const auto& iv = x.interval();
      if (q <= iv.lo) return std::strong_ordering::greater;
      if (q >= iv.hi) return std::strong_ordering::less;
      const int sq = x.poly().sign_at(q);
      if (sq == 0) return std::strong_ordering::equal;
      // One simple root in (lo, hi): it lies above q iff p keeps its sign on (lo, q].
      return sq == x.poly().sign_at(iv.lo) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const AlgebraicNumber& x, const AlgebraicNumber& y) {
  if (y.is_integer()) return compare_to_rational(x, Rational(y.value()));
  if (x.is_integer()) return reverse(compare_to_rational(y, Rational(x.value())));
  if (x.kind() == AlgebraicNumber::Kind::Quadratic && y.kind() == AlgebraicNumber::Kind::Quadratic &&
      x.a() == y.a() && x.b() == y.b() && x.sign() == y.sign()) {
    return std::strong_ordering::equal;
  }

  View vx = view_of(x);
  View vy = view_of(y);
  const IntPolynomial g = gcd(vx.poly, vy.poly);
  if (g.degree() > 0) {
    const Rational lo = std::max(vx.iv.lo, vy.iv.lo);
    const Rational hi = std::min(vx.iv.hi, vy.iv.hi);
    // Interval endpoints are never roots, so a common root in the overlap is
    // the unique root of both.
    if (lo < hi && root_in(g, lo, hi)) return std::strong_ordering::equal;
  }
  while (true) {
    if (vx.iv.hi <= vy.iv.lo) return std::strong_ordering::less;
    if (vy.iv.hi <= vx.iv.lo) return std::strong_ordering::greater;
    if (vx.iv.width() >= vy.iv.width()) {
      halve(vx);
    } else {
      halve(vy);
    }
  }
}

AlgebraicNumber affine_map(const AlgebraicNumber& x, const Integer& scale, const Integer& shift) {
  if (scale == 0) throw Error(Errc::InvalidArgument, "affine_map: zero scale");
  switch (x.kind()) {
    case AlgebraicNumber::Kind::Integer:
      return AlgebraicNumber(Integer(scale * x.value() + shift));
    case AlgebraicNumber::Kind::Quadratic:
      return AlgebraicNumber::quadratic(scale * x.a() + 2 * shift, scale * scale * x.b(),
                                        scale > 0 ? x.sign() : -x.sign());
    case AlgebraicNumber::Kind::Isolated: {
      // q(y) = scale^d p((y - shift) / scale) is monic.
      const auto& c = x.poly().coefficients();
      const int d = x.poly().degree();
      const IntPolynomial y_minus_shift(std::vector<Integer>{Integer(-shift), Integer(1)});
      IntPolynomial q;
      IntPolynomial power = IntPolynomial::constant(1);
      for (int i = 0; i <= d; ++i) {
        q = q + Integer(ipow(scale, static_cast<unsigned long>(d - i)) * c[static_cast<std::size_t>(i)]) * power;
        power = power * y_minus_shift;
      }
      if (q.leading() < 0) q = q.negated();
      Rational lo = Rational(scale) * x.interval().lo + Rational(shift);
      Rational hi = Rational(scale) * x.interval().hi + Rational(shift);
      if (scale < 0) std::swap(lo, hi);
      return AlgebraicNumber::isolated(q, {lo, hi});
    }
  }
  return x;
}

bool is_root_of(const AlgebraicNumber& x, const IntPolynomial& p) {
  if (p.is_zero()) return true;
  if (x.is_integer()) return p.evaluate(x.value()) == 0;
  const IntPolynomial g = gcd(p, x.defining_polynomial());
  if (g.degree() <= 0) return false;
  const RationalInterval iv = x.enclosure();
  return root_in(g, iv.lo, iv.hi);
}

}  // namespace regspec
