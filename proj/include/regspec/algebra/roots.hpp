#pragma once

#include <cstddef>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/algebra/polynomial.hpp"

namespace regspec {

/// Closed interval [lo, hi] used as an open isolating interval when lo < hi,
/// or an exact rational root when lo == hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);

  int variations_at(const Rational& x) const;
  /// Number of distinct real roots in the open interval (lo, hi).
  std::size_t count_in_open(const Rational& lo, const Rational& hi) const;
  const IntPolynomial& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Integer B with every real root of p strictly inside (-B, B).
Integer root_bound(const IntPolynomial& p);

/// Isolating intervals for every real root of a squarefree polynomial, in
/// ascending order. Endpoints are integers until an interval of width one
/// still holds several roots, after which they are dyadic.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisects an isolating interval of p until its width is at most max_width.
RationalInterval refine_root(const IntPolynomial& p, RationalInterval iv, const Rational& max_width);

}  // namespace regspec
