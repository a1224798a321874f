#include "regspec/algebra/roots.hpp"

#include "regspec/error.hpp"

namespace regspec {

namespace {

// Divides by the positive content only, so signs are untouched.
IntPolynomial drop_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const Integer g = p.content();
  if (g == 1) return p;
  std::vector<Integer> c = p.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

Rational floor_midpoint(const Rational& a, const Rational& b) {
  Rational s = a + b;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  mpz_fdiv_q_2exp(f.get_mpz_t(), f.get_mpz_t(), 1);
  return Rational(f);
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "Sturm sequence of the zero polynomial");
  chain_.push_back(drop_content(p));
  if (p.degree() == 0) return;
  chain_.push_back(drop_content(p.derivative()));
  while (chain_.back().degree() > 0) {
    IntPolynomial r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(drop_content(r.negated()));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

std::size_t SturmSequence::count_in_open(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  // V(lo) - V(hi) counts roots in (lo, hi].
  int count = variations_at(lo) - variations_at(hi);
  if (chain_.front().sign_at(hi) == 0) --count;
  return count > 0 ? static_cast<std::size_t>(count) : 0;
}

Integer root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return 1;
  const Integer lead = abs(p.leading());
  Integer worst = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer c = abs(p.coefficient(static_cast<std::size_t>(i)));
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    if (q > worst) worst = q;
  }
  // Cauchy: |root| <= 1 + max |c_i / c_d|
  return worst + 2;
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "isolate_real_roots: zero polynomial");
  std::vector<RationalInterval> out;
  if (p.degree() == 0) return out;
  const SturmSequence sturm(p);
  const Integer b = root_bound(p);

  struct Task {
    Rational lo, hi;
  };
  // Explicit stack, right half pushed first so output stays ascending.
  std::vector<Task> stack{{Rational(-b), Rational(b)}};
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.lo == t.hi) {
      out.push_back({t.lo, t.hi});
      continue;
    }
    const std::size_t k = sturm.count_in_open(t.lo, t.hi);
    if (k == 0) continue;
    const Rational w = t.hi - t.lo;
    if (k == 1 && w <= 1) {
      out.push_back({t.lo, t.hi});
      continue;
    }
    const Rational mid = w > 1 ? floor_midpoint(t.lo, t.hi) : midpoint(t.lo, t.hi);
    const bool mid_is_root = p.sign_at(mid) == 0;
    stack.push_back({mid, t.hi});
    if (mid_is_root) stack.push_back({mid, mid});
    stack.push_back({t.lo, mid});
  }
  return out;
}

RationalInterval refine_root(const IntPolynomial& p, RationalInterval iv, const Rational& max_width) {
  if (iv.is_point()) return iv;
  const SturmSequence sturm(p);
  while (iv.width() > max_width) {
    const Rational mid = midpoint(iv.lo, iv.hi);
    if (p.sign_at(mid) == 0) return {mid, mid};
    if (sturm.count_in_open(iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

}  // namespace regspec
