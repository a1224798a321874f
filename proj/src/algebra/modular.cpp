#include "regspec/algebra/modular.hpp"

#include <mutex>
#include <utility>

#include "regspec/error.hpp"

namespace regspec::modular {

namespace {

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint32_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

// Primes below 2^26 in descending order, grown on demand.
std::vector<std::uint32_t> prime_prefix(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::uint32_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::uint32_t next = cache.empty() ? kernels::kModulusLimit - 1 : cache.back() - 2;
  while (cache.size() < count) {
    while (!is_prime(next)) next -= 2;
    cache.push_back(next);
    next -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace

std::vector<std::uint32_t> primes_exceeding(const Integer& bound) {
  std::size_t count = 1;
  while (true) {
    std::vector<std::uint32_t> ps = prime_prefix(count);
    Integer product = 1;
    for (auto p : ps) product *= p;
    if (product > bound) return ps;
    // Each prime contributes at least 25 bits.
    const std::size_t missing_bits = mpz_sizeinbase(Integer(bound / product + 1).get_mpz_t(), 2);
    count += missing_bits / 25 + 1;
  }
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(Errc::InvalidArgument, "inv_mod: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const Integer& z, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

bool ResidueMatrix::is_zero() const {
  for (double v : data_) {
    if (v != 0.0) return false;
  }
  return true;
}

ResidueMatrix reduce(const IntMatrix& m, const Modulus& mod) {
  ResidueMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Integer& v = m(i, j);
      r(i, j) = v.fits_sint_p() && v >= 0 && v < mod.value ? static_cast<double>(v.get_si())
                                                           : static_cast<double>(reduce(v, mod.value));
    }
  }
  return r;
}

ResidueMatrix identity(std::size_t n) {
  ResidueMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1.0;
  return r;
}

ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, const Modulus& mod) {
  const std::size_t n = a.size();
  ResidueMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      kernels::axpy_mod(out, b.row(k), aik, mod);
    }
  }
  return c;
}

std::vector<std::uint32_t> charpoly_mod(ResidueMatrix h, const Modulus& mod) {
  const std::size_t n = h.size();
  const std::uint32_t p = mod.value;
  auto at = [&](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(h(i, j)); };

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h(pivot, j) == 0.0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(pivot, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, pivot), h(r, j + 1));
    }
    const std::uint32_t tinv = inv_mod(at(j + 1, j), p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const std::uint32_t u = mul_mod(at(i, j), tinv, p);
      if (u == 0) continue;
      // row_i -= u * row_{j+1}; then col_{j+1} += u * col_i keeps similarity.
      kernels::axpy_mod(h.row(i), h.row(j + 1), static_cast<double>(p - u), mod);
      for (std::size_t r = 0; r < n; ++r) {
        const std::uint64_t v = static_cast<std::uint64_t>(at(r, j + 1)) + static_cast<std::uint64_t>(u) * at(r, i);
        h(r, j + 1) = static_cast<double>(v % p);
      }
    }
  }

  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}
  std::vector<std::vector<std::uint32_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<std::uint32_t> cur(m + 1, 0);
    const std::uint32_t diag = at(m - 1, m - 1);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = static_cast<std::uint32_t>((cur[d + 1] + prev[d]) % p);
      cur[d] = static_cast<std::uint32_t>((cur[d] + static_cast<std::uint64_t>(p - diag) * prev[d]) % p);
    }
    std::uint32_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, at(m - i, m - i - 1), p);
      if (t == 0) break;
      const std::uint32_t coef = mul_mod(t, at(m - i - 1, m - 1), p);
      if (coef == 0) continue;
      const auto& older = polys[m - i - 1];
      for (std::size_t d = 0; d < older.size(); ++d) {
        cur[d] = static_cast<std::uint32_t>((cur[d] + static_cast<std::uint64_t>(p - coef) * older[d]) % p);
      }
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

ResidueMatrix evaluate(const IntPolynomial& f, const ResidueMatrix& m, const Modulus& mod) {
  const std::size_t n = m.size();
  ResidueMatrix acc(n);
  const auto& coeffs = f.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = multiply(acc, m, mod);
    const double c = static_cast<double>(reduce(*it, mod.value));
    for (std::size_t i = 0; i < n; ++i) {
      const double v = acc(i, i) + c;
      acc(i, i) = v >= mod.p ? v - mod.p : v;
    }
  }
  return acc;
}

void CrtAccumulator::add(std::uint32_t residue, std::uint32_t prime) {
  const std::uint32_t current = reduce(value_, prime);
  const std::uint32_t diff = (residue + prime - current) % prime;
  const std::uint32_t minv = inv_mod(reduce(modulus_, prime), prime);
  const std::uint32_t t = mul_mod(diff, minv, prime);
  value_ += modulus_ * t;
  modulus_ *= prime;
}

Integer CrtAccumulator::symmetric() const {
  Integer half = modulus_ / 2;
  if (value_ > half) return value_ - modulus_;
  return value_;
}

}  // namespace regspec::modular
