#include "regspec/spectral/structure.hpp"

#include <algorithm>

#include "regspec/algebra/charpoly.hpp"
#include "regspec/algebra/factor.hpp"
#include "regspec/algebra/kernel_basis.hpp"
#include "regspec/algebra/modular.hpp"
#include "regspec/error.hpp"

namespace regspec {

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool constant_diagonal(const modular::ResidueMatrix& m) {
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m(i, i) != m(0, 0)) return false;
  }
  return true;
}

const Integer& require_integer(const AlgebraicNumber& x) {
  if (!x.is_integer()) throw Error(Errc::NonIntegralEigenvalue, x.to_string() + " is not an integer");
  return x.value();
}

}  // namespace

bool is_walk_regular(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 2) return true;
  // 0 <= (A^r)_ii <= Delta^r, so residues agree for all primes iff values do.
  const Integer bound = ipow(Integer(static_cast<unsigned long>(max_degree(g))), n - 1);
  const IntMatrix a = g.adjacency_matrix();
  for (const auto prime : modular::primes_exceeding(bound)) {
    const modular::Modulus mod(prime);
    const auto base = modular::reduce(a, mod);
    auto power = base;
    for (std::size_t r = 2; r < n; ++r) {
      power = modular::multiply(power, base, mod);
      if (!constant_diagonal(power)) return false;
    }
  }
  return true;
}

bool annihilation_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  const IntMatrix a = g.adjacency_matrix();
  const IntPolynomial f = squarefree_part(char_poly(a));
  // Every entry of A^i is at most rho^i in absolute value.
  const Integer rho(static_cast<unsigned long>(std::max<std::size_t>(max_degree(g), 1)));
  Integer bound = 0;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i) bound += abs(f.coefficient(i)) * ipow(rho, i);
  for (const auto prime : modular::primes_exceeding(2 * bound)) {
    const modular::Modulus mod(prime);
    if (!modular::evaluate(f, modular::reduce(a, mod), mod).is_zero()) return false;
  }
  return true;
}

RegularPartition regular_halves_partition(const Graph& g, const Integer& lambda) {
  const auto k = regular_degree(g);
  if (!k) throw Error(Errc::InvalidArgument, "regular_halves_partition: graph is not regular");
  if (lambda == static_cast<unsigned long>(*k)) throw Error(Errc::InvalidArgument, "regular_halves_partition: lambda equals the degree");

  const auto basis = rational_kernel_basis(g.adjacency_matrix(), lambda);
  if (basis.size() != 1) {
    throw Error(Errc::NotSimple, lambda.get_str() + " has multiplicity " + std::to_string(basis.size()));
  }
  const std::size_t n = g.order();
  if (n % 2 != 0) throw Error(Errc::OddOrder, "order " + std::to_string(n) + " is odd");

  RegularPartition part;
  part.lambda = lambda;
  for (std::size_t v = 0; v < n; ++v) {
    const Integer& x = basis[0][v];
    if (x == 1) {
      part.half_plus.push_back(v);
    } else if (x == -1) {
      part.half_minus.push_back(v);
    } else {
      throw Error(Errc::NotPlusMinusOne, "eigenvector entry " + x.get_str() + " at vertex " + std::to_string(v));
    }
  }
  if (part.half_plus.size() != part.half_minus.size()) {
    throw Error(Errc::NotPlusMinusOne, "eigenvector is not balanced");
  }

  const Integer kk(static_cast<unsigned long>(*k));
  part.internal = Integer((kk + lambda) / 2).get_ui();
  part.external = Integer((kk - lambda) / 2).get_ui();
  std::vector<int> side(n, 0);
  for (auto v : part.half_plus) side[v] = 1;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t inside = 0;
    for (auto u : g.neighbors(v)) inside += side[u] == side[v];
    if (inside != part.internal || g.degree(v) - inside != part.external) {
      throw Error(Errc::NotPlusMinusOne, "vertex " + std::to_string(v) + " has " + std::to_string(inside) + " neighbours in its half");
    }
  }
  return part;
}

DivisibilityResult divisibility_check(const Spectrum& s, const Integer& lambda_j, ProductIndexing indexing) {
  const AlgebraicNumber target(lambda_j);
  const std::size_t mult = s.multiplicity(target);
  if (mult == 0) throw Error(Errc::NotAnEigenvalue, lambda_j.get_str() + " is not in " + s.to_string());
  if (mult != 1) throw Error(Errc::NotSimple, lambda_j.get_str() + " has multiplicity " + std::to_string(mult));
  const Integer& k = require_integer(s.largest());
  if (k == lambda_j) throw Error(Errc::InvalidArgument, "divisibility_check: lambda_j is the largest eigenvalue");

  DivisibilityResult r;
  r.p = 1;
  r.q = 1;
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    const auto& x = s.entries()[i].value;
    if (x == target) continue;
    if (i == 0 && indexing == ProductIndexing::ExcludeDegree) continue;
    const Integer& li = require_integer(x);
    r.p *= k - li;
    r.q *= lambda_j - li;
  }
  const Integer n(static_cast<unsigned long>(s.order()));
  r.sum_ok = divides(n, Integer(r.p + r.q));
  r.diff_ok = divides(n, Integer(r.p - r.q));
  return r;
}

CommonNeighborValues common_neighbor_values(const Integer& n, const Integer& k, const Integer& l2, const Integer& l3,
                                            const Integer& l4) {
  if (n == 0) throw Error(Errc::InvalidArgument, "common_neighbor_values: n must be positive");
  const Integer t = (k - l3) * (k - l4);
  const Integer u = (l2 - l3) * (l2 - l4);
  const Rational plus = fraction(t + u, n), minus = fraction(t - u, n);
  const Rational shift(Integer(l3 + l4));
  CommonNeighborValues v;
  v.same_adjacent = shift + plus;
  v.same_nonadjacent = plus;
  v.cross_adjacent = shift + minus;
  v.cross_nonadjacent = minus;
  for (Rational* q : {&v.same_adjacent, &v.same_nonadjacent, &v.cross_adjacent, &v.cross_nonadjacent}) q->canonicalize();
  return v;
}

CommonNeighborResult common_neighbor_check(const Graph& g, const RegularPartition& part, const Spectrum& s) {
  if (s.distinct() != 4 || !s.all_integral() || s.entries()[0].multiplicity != 1) {
    throw Error(Errc::InvalidArgument, "common_neighbor_check: needs four distinct integral eigenvalues, " + s.to_string());
  }
  if (s.multiplicity(AlgebraicNumber(part.lambda)) != 1 || s.largest() == AlgebraicNumber(part.lambda)) {
    throw Error(Errc::InvalidArgument, "common_neighbor_check: partition eigenvalue is not a simple non-degree eigenvalue");
  }
  std::vector<Integer> others;
  for (std::size_t i = 1; i < 4; ++i) {
    if (s.entries()[i].value != AlgebraicNumber(part.lambda)) others.push_back(s.entries()[i].value.value());
  }
  const std::size_t n = g.order();
  CommonNeighborResult r;
  r.expected = common_neighbor_values(Integer(static_cast<unsigned long>(n)), s.largest().value(), part.lambda, others[0], others[1]);

  std::vector<int> side(n, 0);
  for (auto v : part.half_plus) side[v] = 1;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool same = side[u] == side[v];
      const bool adj = g.adjacent(u, v);
      const Rational& want = same ? (adj ? r.expected.same_adjacent : r.expected.same_nonadjacent)
                                  : (adj ? r.expected.cross_adjacent : r.expected.cross_nonadjacent);
      const std::size_t got = g.common_neighbors(u, v);
      if (Rational(Integer(static_cast<unsigned long>(got))) != want) {
        r.ok = false;
        r.first_violation = CommonNeighborViolation{u, v, got, want};
        return r;
      }
    }
  }
  return r;
}

}  // namespace regspec
