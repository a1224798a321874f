#include "regspec/algebra/charpoly.hpp"

#include "regspec/algebra/modular.hpp"

namespace regspec {

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(1);

  // |c_i| <= C(n,i) rho^i <= (1 + rho)^n
  const Integer bound = 2 * ipow(m.max_abs_row_sum() + 1, static_cast<unsigned long>(n));
  const auto primes = modular::primes_exceeding(bound);

  std::vector<modular::CrtAccumulator> acc(n + 1);
  for (std::uint32_t p : primes) {
    const kernels::Modulus mod(p);
    const auto coeffs = modular::charpoly_mod(modular::reduce(m, mod), mod);
    for (std::size_t i = 0; i <= n; ++i) acc[i].add(coeffs[i], p);
  }
  std::vector<Integer> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = acc[i].symmetric();
  return IntPolynomial(std::move(c));
}

}  // namespace regspec
