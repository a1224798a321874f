#pragma once

#include "regspec/algebra/int_matrix.hpp"
#include "regspec/algebra/polynomial.hpp"

namespace regspec {

/// det(xI - M) as a monic integer polynomial of degree n, exact.
///
/// Computed modulo enough word-size primes to exceed twice the coefficient
/// bound (1 + rho)^n, rho = max absolute row sum, then lifted by CRT.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace regspec
