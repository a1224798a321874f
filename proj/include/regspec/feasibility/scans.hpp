#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/feasibility/feasibility.hpp"
#include "regspec/feasibility/surd.hpp"

namespace regspec {

/// Spectrum {[k]^1, [-1]^1, [alpha]^m, [beta]^m} with alpha, beta conjugate
/// quadratics, m = (n-2)/2.
struct NonIntegerScanEntry {
  long k = 0;
  /// Orders n in (k+1, 2k] for which alpha + beta = -2(k-1)/(n-2) is an
  /// integer; larger n give a sum in (-1, 0). Always {2k}.
  std::vector<long> admissible_orders;
  long n = 0;
  /// (-1 +- sqrt(2k+1))/2.
  QuadraticSurd alpha, beta;
  /// (k-1)/2, the same-half degree of the halves partition.
  Rational partition_degree;
  /// Common neighbours of same-half pairs: k/2 - 1 adjacent, k/2 non-adjacent.
  QuadraticSurd same_adjacent, same_nonadjacent;
  bool feasible = true;
  std::string certificate;
  FeasibilityReport pipeline;
};

/// One entry per k in [kmin, kmax]; Error(InvalidArgument) if kmin < 2.
std::vector<NonIntegerScanEntry> scan_noninteger(long kmin, long kmax);

/// Spectrum {[k]^1, [-1]^1, [alpha]^m, [beta]^(n-2-m)} with integers
/// alpha >= 1 and beta <= -2.
struct IntegerScanEntry {
  long n = 0, k = 0, alpha = 0;
  /// -(k(n-k) + (k-1)alpha - 1) / ((n-2)alpha + k - 1)
  Rational beta;
  /// (-(k-1) - (n-2)beta) / (alpha - beta), once beta passed
  std::optional<Rational> m;
  /// -2(1+alpha)(1+beta)/n, once m passed
  std::optional<Rational> c;
  bool feasible = false;
  /// First failed check: beta, multiplicity, c_integral, c_bound, case1,
  /// case2, case3, or pipeline:<condition>; empty when feasible.
  std::string failed;
  std::string certificate;
};

struct IntegerScanReport {
  long n_min = 0, n_max = 0;
  /// Every triple of even n in [n_min, n_max], 3 <= k <= n-2,
  /// 1 <= alpha <= k-1, ordered by (n, k, alpha).
  std::vector<IntegerScanEntry> entries;
  std::size_t feasible_count = 0;
  /// Triples whose c reached 4(n-k-1)/n or more.
  std::size_t bound_violations = 0;
  std::map<std::string, std::size_t> failures;
};

/// Runs on up to `threads` workers split by n; the result does not depend on
/// the thread count.
IntegerScanReport scan_integer(long n_max, unsigned threads = 1, long n_min = 4);

IntegerScanEntry scan_integer_triple(long n, long k, long alpha);

/// Contradiction for c in {1, 2, 3}, or none:
///   c = 1, 2  same-half adjacent common neighbours
///             alpha + beta + ((k-alpha)(k-beta) + (1+alpha)(1+beta))/n < 0
///   c = 3     2(n-k-1)alpha^2 + [3n^2 - (2k+4)n + 2k^2 - 2]alpha + (k-3)n + 2k^2 + 2k
///             has positive first and second summands and a non-negative third
std::optional<std::string> integer_case_check(long n, long k, long alpha, const Integer& beta, long c);

}  // namespace regspec
