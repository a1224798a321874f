#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/feasibility/surd.hpp"
#include "regspec/spectral/spectrum.hpp"

namespace regspec {

/// {[k]^1, [lambda2]^1, [lambda3]^m, [lambda4]^(n-2-m)}, not necessarily the
/// spectrum of a graph. Values are rational or quadratic surds, not
/// necessarily algebraic integers; m may be a non-integral rational (the
/// pipeline then fails at its first condition).
struct PutativeSpectrum {
  long n = 0;
  Integer k;
  QuadraticSurd lambda2;
  QuadraticSurd lambda3;
  Rational m;
  QuadraticSurd lambda4;

  /// Four distinct eigenvalues, exactly two simple: lambda2 is the simple one
  /// below k, lambda3 the larger of the other two. None for other shapes
  /// and for eigenvalues of degree 3 or more.
  static std::optional<PutativeSpectrum> from_spectrum(const Spectrum& s);
  std::string to_string() const;
};

struct ConditionResult {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct FeasibilityReport {
  /// In evaluation order: multiplicities, trace, trace_of_squares,
  /// partition_degrees, divisibility, common_neighbors, exclusions.
  std::vector<ConditionResult> conditions;
  bool feasible = false;
  std::optional<std::size_t> first_failure;
  /// beta and m from the traces when -1 is the non-simple eigenvalue of
  /// multiplicity m and lambda2 = alpha.
  std::optional<Rational> beta, m;
  /// -2(1 + lambda3)(1 + lambda4)/n when lambda2 = -1 and the value is rational.
  std::optional<Rational> c;
};

struct BetaM {
  Rational beta, m;
};

/// For spectrum {[k]^1, [alpha]^1, [beta]^(n-2-m), [-1]^m}:
///   beta = (kn - k^2 - k - alpha^2 - alpha) / (n - k - alpha - 2)
///   m    = n - 1 + (n-k-1)(n-2alpha-2) / (k^2 + (2-n)k + alpha^2 + 2alpha - n + 2)
/// Error(DegenerateDenominator) when either denominator vanishes.
BetaM derive_beta_m(const Integer& n, const Integer& k, const Rational& alpha);

/// Necessary conditions for a connected k-regular graph with the putative
/// spectrum, all evaluated; feasible iff every one passes.
///   multiplicities     distinct values below k, m integral with 2 <= m <= n-4,
///                      conjugate values with equal multiplicities
///   trace              k + lambda2 + m lambda3 + (n-2-m) lambda4 = 0
///   trace_of_squares   the same with squares equals kn
///   partition_degrees  n even, lambda2 integral, (k +- lambda2)/2 integral
///   divisibility       n divides P + Q and P - Q,
///                      P = (k-lambda3)(k-lambda4), Q = (lambda2-lambda3)(lambda2-lambda4)
///   common_neighbors   lambda3 + lambda4 + (P +- Q)/n and (P +- Q)/n integral and
///                      >= 0 for every pair type the halves partition admits,
///                      the same-half adjacent value <= k - 1
///   exclusions         least eigenvalue below -1 (else a complete graph), and
///                      a positive eigenvalue other than k (else complete
///                      multipartite, three eigenvalues)
/// Error(InvalidArgument) if irrational values lie in different quadratic
/// fields.
FeasibilityReport feasibility_pipeline(const PutativeSpectrum& ps);

}  // namespace regspec
