#include <bit>

#include "regspec/kernels/kernels.hpp"

namespace regspec::kernels::scalar {

void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m) {
  const std::uint64_t p = m.value;
  const auto cc = static_cast<std::uint64_t>(c);
  for (std::size_t i = 0; i < len; ++i) {
    const auto yi = static_cast<std::uint64_t>(y[i]);
    const auto xi = static_cast<std::uint64_t>(x[i]);
    y[i] = static_cast<double>((yi + cc * xi) % p);
  }
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace regspec::kernels::scalar
