#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/algebra/polynomial.hpp"

namespace regspec {

struct Factor {
  IntPolynomial poly;  // monic
  unsigned multiplicity = 1;
  /// Residual of degree > 16 or with non-real roots, left unfactored.
  bool unsplit = false;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Distinct integer roots of a monic polynomial with multiplicities, largest
/// root first.
std::vector<std::pair<Integer, unsigned>> integer_roots(const IntPolynomial& p);

/// Yun decomposition of a monic polynomial: p = prod f_i^i with each f_i
/// squarefree and pairwise coprime. Only nonconstant f_i are returned.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& p);

/// Product of the distinct irreducible factors (monic input).
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Factorization of a monic polynomial over Q. Linear factors come first,
/// ordered by root descending; nonlinear factors follow in increasing degree.
/// Pieces of degree >= 4 are split completely when all their roots are real
/// and the degree is at most 16; otherwise they are returned flagged unsplit.
/// Throws Error(InvalidArgument) for non-monic input.
std::vector<Factor> factor_over_rationals(const IntPolynomial& p);

bool has_unsplit(const std::vector<Factor>& factors);

/// Expands prod f^mult.
IntPolynomial multiply_out(const std::vector<Factor>& factors);

/// Number of real roots of p (nonzero), with multiplicity, strictly below q.
std::size_t count_roots_below(const IntPolynomial& p, const Rational& q);

}  // namespace regspec
