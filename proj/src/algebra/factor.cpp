#include "regspec/algebra/factor.hpp"

#include <algorithm>
#include <optional>

#include "regspec/algebra/roots.hpp"
#include "regspec/error.hpp"

namespace regspec {

namespace {

constexpr unsigned long kScanLimit = 1ul << 20;
constexpr int kSplitDegreeCap = 16;

void require_monic(const IntPolynomial& p, const char* what) {
  if (!p.is_monic()) throw Error(Errc::InvalidArgument, std::string(what) + ": polynomial must be monic");
}

// 2 * max |c_{d-i}|^(1/i), rounded up: bounds |root| for monic p.
Integer fujiwara_bound(const IntPolynomial& p) {
  const int d = p.degree();
  Integer best = 0;
  for (int i = 1; i <= d; ++i) {
    Integer c = abs(p.coefficient(static_cast<std::size_t>(d - i)));
    if (c == 0) continue;
    Integer r;
    mpz_root(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    if (ipow(r, static_cast<unsigned long>(i)) < c) ++r;
    if (r > best) best = r;
  }
  return 2 * best;
}

// Candidate integer roots of a monic p with p(0) != 0.
std::vector<Integer> root_candidates(const IntPolynomial& p) {
  std::vector<Integer> out;
  const Integer bound = fujiwara_bound(p);
  const Integer& c0 = p.coefficient(0);
  if (bound <= kScanLimit) {
    const unsigned long b = bound.get_ui();
    for (unsigned long r = b; r >= 1; --r) {
      const Integer z(r);
      if (!divides(z, c0)) continue;
      if (p.evaluate(z) == 0) out.push_back(z);
      if (p.evaluate(Integer(-z)) == 0) out.push_back(-z);
    }
    return out;
  }
  // Large coefficients: isolate the real roots and test the at most two
  // integers inside each unit-width interval.
  for (const auto& iv : isolate_real_roots(squarefree_part(p))) {
    Integer lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
    for (Integer z = lo; z <= hi; ++z) {
      if (z != 0 && p.evaluate(z) == 0) out.push_back(z);
    }
  }
  return out;
}

using Interval = RationalInterval;

Interval mul(const Interval& x, const Interval& y) {
  const Rational a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
  return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

bool integer_in(const Interval& iv, Integer& out) {
  Integer lo, hi;
  mpz_cdiv_q(lo.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), iv.hi.get_num_mpz_t(), iv.hi.get_den_mpz_t());
  if (lo > hi) return false;
  out = lo;
  return true;
}

// Splits a squarefree monic polynomial with only real, irrational roots into
// irreducible factors. Every factor is the product of x - r over some subset
// of the roots with integer coefficients, so subsets containing the smallest
// remaining root are tried in increasing size. Roots are enclosed tightly
// enough that each coefficient interval holds at most one integer; the
// candidate is then confirmed by exact division.
class RootSubsetSplitter {
 public:
  explicit RootSubsetSplitter(const IntPolynomial& p) : p_(p) {}

  std::optional<std::vector<IntPolynomial>> run() {
    const int d = p_.degree();
    if (d > kSplitDegreeCap) return std::nullopt;
    auto ivs = isolate_real_roots(p_);
    if (static_cast<int>(ivs.size()) != d) return std::nullopt;
    const Integer b = root_bound(p_) + 1;
    Integer den = 4 * d * ipow(Integer(2), static_cast<unsigned long>(d)) * ipow(b, static_cast<unsigned long>(d));
    const Rational width(Integer(1), den);
    for (auto& iv : ivs) roots_.push_back(refine_root(p_, iv, width));

    std::vector<std::size_t> remaining(roots_.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::vector<IntPolynomial> out;
    IntPolynomial rest = p_;
    while (!remaining.empty()) {
      std::optional<std::pair<IntPolynomial, std::vector<std::size_t>>> found;
      for (std::size_t s = 2; 2 * s <= remaining.size() && !found; ++s) found = search(remaining, rest, s);
      if (!found) {
        out.push_back(rest);
        break;
      }
      out.push_back(found->first);
      rest = exact_quotient(rest, found->first);
      std::vector<std::size_t> next;
      for (auto i : remaining) {
        if (std::find(found->second.begin(), found->second.end(), i) == found->second.end()) next.push_back(i);
      }
      remaining = std::move(next);
    }
    return out;
  }

 private:
  std::optional<std::pair<IntPolynomial, std::vector<std::size_t>>> search(const std::vector<std::size_t>& remaining,
                                                                           const IntPolynomial& rest, std::size_t s) {
    std::vector<std::size_t> pick{remaining[0]};
    std::optional<std::pair<IntPolynomial, std::vector<std::size_t>>> found;
    choose(remaining, 1, s, pick, rest, found);
    return found;
  }

  void choose(const std::vector<std::size_t>& remaining, std::size_t from, std::size_t s, std::vector<std::size_t>& pick,
              const IntPolynomial& rest, std::optional<std::pair<IntPolynomial, std::vector<std::size_t>>>& found) {
    if (found) return;
    if (pick.size() == s) {
      if (auto f = candidate(pick); f && divmod_monic(rest, *f).second.is_zero()) found.emplace(std::move(*f), pick);
      return;
    }
    for (std::size_t i = from; i + (s - pick.size()) <= remaining.size() && !found; ++i) {
      pick.push_back(remaining[i]);
      choose(remaining, i + 1, s, pick, rest, found);
      pick.pop_back();
    }
  }

  std::optional<IntPolynomial> candidate(const std::vector<std::size_t>& pick) const {
    Interval sum{0, 0};
    for (auto i : pick) sum = {sum.lo + roots_[i].lo, sum.hi + roots_[i].hi};
    Integer z;
    if (!integer_in(sum, z)) return std::nullopt;
    std::vector<Interval> c{{1, 1}};
    for (auto i : pick) {
      std::vector<Interval> next(c.size() + 1, Interval{0, 0});
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j + 1] = {next[j + 1].lo + c[j].lo, next[j + 1].hi + c[j].hi};
        const Interval t = mul(c[j], roots_[i]);
        next[j] = {next[j].lo - t.hi, next[j].hi - t.lo};
      }
      c = std::move(next);
    }
    std::vector<Integer> coeffs(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!integer_in(c[j], coeffs[j])) return std::nullopt;
    }
    return IntPolynomial(std::move(coeffs));
  }

  const IntPolynomial& p_;
  std::vector<Interval> roots_;
};

}  // namespace

std::vector<std::pair<Integer, unsigned>> integer_roots(const IntPolynomial& p) {
  require_monic(p, "integer_roots");
  std::vector<std::pair<Integer, unsigned>> roots;
  IntPolynomial q = p;
  unsigned zeros = 0;
  while (q.degree() > 0 && q.coefficient(0) == 0) {
    q = IntPolynomial(std::vector<Integer>(q.coefficients().begin() + 1, q.coefficients().end()));
    ++zeros;
  }
  if (zeros > 0) roots.emplace_back(0, zeros);
  if (q.degree() > 0) {
    for (const auto& r : root_candidates(q)) {
      const IntPolynomial lin = IntPolynomial::linear_root(r);
      unsigned mult = 0;
      while (q.degree() > 0) {
        auto [quo, rem] = divmod_monic(q, lin);
        if (!rem.is_zero()) break;
        q = std::move(quo);
        ++mult;
      }
      roots.emplace_back(r, mult);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return roots;
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p) {
  require_monic(p, "squarefree_decomposition");
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (p.degree() <= 0) return out;
  const IntPolynomial dp = p.derivative();
  const IntPolynomial a = gcd(p, dp);
  IntPolynomial b = exact_quotient(p, a);
  IntPolynomial c = exact_quotient(dp, a);
  IntPolynomial d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return out;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  require_monic(p, "squarefree_part");
  if (p.degree() <= 0) return p;
  return exact_quotient(p, gcd(p, p.derivative()));
}

std::vector<Factor> factor_over_rationals(const IntPolynomial& p) {
  require_monic(p, "factor_over_rationals");
  std::vector<Factor> out;
  IntPolynomial residual = p;
  for (const auto& [r, mult] : integer_roots(p)) {
    const IntPolynomial lin = IntPolynomial::linear_root(r);
    residual = exact_quotient(residual, pow(lin, mult));
    out.push_back({lin, mult, false});
  }
  // No rational roots remain, so squarefree parts of degree 2 or 3 are
  // irreducible. Larger ones are split when all their roots are real.
  std::vector<Factor> rest;
  for (auto& [f, mult] : squarefree_decomposition(residual)) {
    if (f.degree() <= 3) {
      rest.push_back({std::move(f), mult, false});
    } else if (auto parts = RootSubsetSplitter(f).run()) {
      for (auto& g : *parts) rest.push_back({std::move(g), mult, false});
    } else {
      rest.push_back({std::move(f), mult, true});
    }
  }
  std::sort(rest.begin(), rest.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return a.poly < b.poly;
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool has_unsplit(const std::vector<Factor>& factors) {
  return std::any_of(factors.begin(), factors.end(), [](const Factor& f) { return f.unsplit; });
}

IntPolynomial multiply_out(const std::vector<Factor>& factors) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (const auto& f : factors) acc = acc * pow(f.poly, f.multiplicity);
  return acc;
}

std::size_t count_roots_below(const IntPolynomial& p, const Rational& q) {
  require_monic(p, "count_roots_below");
  std::size_t total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    const SturmSequence sturm(f);
    const Rational lo(-root_bound(f));
    total += mult * sturm.count_in_open(lo, q);
  }
  return total;
}

}  // namespace regspec
