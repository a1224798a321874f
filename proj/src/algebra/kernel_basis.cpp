#include "regspec/algebra/kernel_basis.hpp"

#include "regspec/error.hpp"

namespace regspec {

namespace {

IntVector to_primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  int lead = 0;
  for (const auto& z : out) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace

std::vector<IntVector> rational_kernel_basis(const IntMatrix& m, const Integer& lambda) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][i] -= lambda;
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
    basis.push_back(to_primitive(v));
  }
  if (basis.empty()) {
    throw Error(Errc::NotAnEigenvalue, lambda.get_str() + " is not an eigenvalue");
  }
  return basis;
}

}  // namespace regspec
