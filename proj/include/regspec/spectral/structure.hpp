#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/graph/graph.hpp"
#include "regspec/spectral/spectrum.hpp"

namespace regspec {

/// diag(A^r) constant for r = 2..n-1, which by Cayley-Hamilton covers every
/// r. Powers are taken modulo primes whose product exceeds Delta^(n-1).
bool is_walk_regular(const Graph& g);

/// f(A) = 0 where f is the product of the distinct irreducible factors of the
/// characteristic polynomial, i.e. prod over distinct eigenvalues (A - lambda I).
bool annihilation_check(const Graph& g);

struct RegularPartition {
  std::vector<std::size_t> half_plus;   // eigenvector entry +1
  std::vector<std::size_t> half_minus;  // eigenvector entry -1
  std::size_t internal = 0;             // a = (k + lambda)/2
  std::size_t external = 0;             // b = (k - lambda)/2
  Integer lambda;
};

/// Regular partition into halves generated by a simple integer eigenvalue
/// lambda != k of a regular graph: the kernel of A - lambda I, scaled to
/// +-1 entries. Errors, in the order checked: InvalidArgument (not regular or
/// lambda = k), NotAnEigenvalue, NotSimple, OddOrder, NotPlusMinusOne (the
/// scaled vector is not balanced +-1, or the degrees do not come out).
RegularPartition regular_halves_partition(const Graph& g, const Integer& lambda);

/// Which eigenvalues enter the products of the divisibility condition.
enum class ProductIndexing {
  /// Distinct eigenvalues other than k and lambda_j.
  ExcludeDegree,
  /// Every distinct eigenvalue other than lambda_j, k included; P is then 0.
  Literal,
};

struct DivisibilityResult {
  Integer p;  // prod (k - lambda_i)
  Integer q;  // prod (lambda_j - lambda_i)
  bool sum_ok = false;   // n | P + Q
  bool diff_ok = false;  // n | P - Q

  bool passed() const noexcept { return sum_ok && diff_ok; }
};

/// Needs lambda_j to be a simple eigenvalue other than the largest, and every
/// factor integral (Error NonIntegralEigenvalue otherwise).
DivisibilityResult divisibility_check(const Spectrum& s, const Integer& lambda_j,
                                      ProductIndexing indexing = ProductIndexing::ExcludeDegree);

/// The four common-neighbour counts forced by spectrum
/// {[k]^1, [l2]^1, [l3]^m, [l4]^(n-2-m)} with halves generated by l2.
/// With T = (k-l3)(k-l4) and U = (l2-l3)(l2-l4):
///   same half, adjacent        l3 + l4 + (T + U)/n
///   same half, non-adjacent    (T + U)/n
///   across, adjacent           l3 + l4 + (T - U)/n
///   across, non-adjacent       (T - U)/n
struct CommonNeighborValues {
  Rational same_adjacent, same_nonadjacent, cross_adjacent, cross_nonadjacent;
};

CommonNeighborValues common_neighbor_values(const Integer& n, const Integer& k, const Integer& l2, const Integer& l3,
                                            const Integer& l4);

struct CommonNeighborViolation {
  std::size_t u = 0, v = 0;
  std::size_t observed = 0;
  Rational expected;
};

struct CommonNeighborResult {
  bool ok = true;
  CommonNeighborValues expected;
  std::optional<CommonNeighborViolation> first_violation;
};

/// Compares |N(u) ∩ N(v)| with the forced values over every pair. The
/// spectrum must have four distinct integral values with the largest simple
/// and part.lambda simple (Error InvalidArgument otherwise).
CommonNeighborResult common_neighbor_check(const Graph& g, const RegularPartition& part, const Spectrum& s);

}  // namespace regspec
