#include "regspec/algebra/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "regspec/error.hpp"

namespace regspec {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::linear_root(const Integer& r) {
  return IntPolynomial(std::vector<Integer>{Integer(-r), Integer(1)});
}

IntPolynomial IntPolynomial::monomial(std::size_t d) {
  std::vector<Integer> c(d + 1, Integer(0));
  c[d] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(Errc::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& q) const {
  if (coeffs_.empty()) return 0;
  const Integer& a = q.get_num();
  const Integer& b = q.get_den();  // positive
  Integer acc = coeffs_.back();
  Integer bp = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    bp *= b;
    acc = acc * a + coeffs_[static_cast<std::size_t>(i)] * bp;
  }
  return sgn(acc);
}

Rational IntPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Rational(*it);
  acc.canonicalize();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::negated() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::compose_affine(const Integer& scale, const Integer& shift) const {
  const IntPolynomial inner(std::vector<Integer>{shift, scale});
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

std::string IntPolynomial::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& k, const IntPolynomial& a) {
  std::vector<Integer> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs_[i];
  return IntPolynomial(std::move(c));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs_[static_cast<std::size_t>(i)];
    const auto& y = b.coeffs_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (!b.is_monic()) throw Error(Errc::InvalidArgument, "divmod_monic: divisor not monic");
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPolynomial{}, a};
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const auto& bc = b.coefficients();
  for (int i = da; i >= db; --i) {
    const Integer c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "exact_quotient: division by zero polynomial");
  std::vector<Integer> r = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    if (a.is_zero()) return {};
    throw Error(Errc::InvalidArgument, "exact_quotient: divisor does not divide");
  }
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const auto& bc = b.coefficients();
  for (int i = da; i >= db; --i) {
    const Integer& num = r[static_cast<std::size_t>(i)];
    if (num == 0) continue;
    if (!divides(bc.back(), num)) throw Error(Errc::InvalidArgument, "exact_quotient: divisor does not divide");
    Integer c;
    mpz_divexact(c.get_mpz_t(), num.get_mpz_t(), bc.back().get_mpz_t());
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), c.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (const auto& c : r) {
    if (c != 0) throw Error(Errc::InvalidArgument, "exact_quotient: divisor does not divide");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "pseudo remainder by zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const auto& bc = b.coefficients();
  const Integer lc = abs(bc.back());
  const int lc_sign = sgn(bc.back());
  std::vector<Integer> r = a.coefficients();
  for (int i = a.degree(); i >= db; --i) {
    // r <- |lc| * r - sign(lc) * r_i * x^(i-db) * b, keeps the multiplier positive.
    const Integer top = r[static_cast<std::size_t>(i)];
    for (auto& c : r) c *= lc;
    if (top == 0) continue;
    const Integer f = lc_sign > 0 ? top : Integer(-top);
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), f.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

}  // namespace regspec
