// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>
#include <cmath>

#include "regspec/kernels/kernels.hpp"

namespace regspec::kernels::avx2 {

namespace {

inline double reduce_one(double v, const Modulus& m) {
  const double q = std::floor(v * m.inv);
  double r = std::fma(-q, m.p, v);
  if (r < 0) r += m.p;
  if (r >= m.p) r -= m.p;
  return r;
}

}  // namespace

void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m) {
  const __m256d P = _mm256_set1_pd(m.p);
  const __m256d PI = _mm256_set1_pd(m.inv);
  const __m256d C = _mm256_set1_pd(c);
  const __m256d Z = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    // c*x + y < 2^53, so the fused product-sum is exact.
    const __m256d v = _mm256_fmadd_pd(C, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, PI));
    __m256d r = _mm256_fnmadd_pd(q, P, v);
    // q may be off by one in either direction.
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, Z, _CMP_LT_OQ), P));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, P, _CMP_GE_OQ), P));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < len; ++i) y[i] = reduce_one(std::fma(c, x[i], y[i]), m);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  // Nibble lookup popcount (Mula et al.).
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i v = _mm256_and_si256(va, vb);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace regspec::kernels::avx2
