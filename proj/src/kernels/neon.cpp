#include <arm_neon.h>

#include <bit>
#include <cmath>

#include "regspec/kernels/kernels.hpp"

namespace regspec::kernels::neon {

void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m) {
  const float64x2_t P = vdupq_n_f64(m.p);
  const float64x2_t PI = vdupq_n_f64(m.inv);
  const float64x2_t C = vdupq_n_f64(c);
  const float64x2_t Z = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const float64x2_t v = vfmaq_f64(vld1q_f64(y + i), C, vld1q_f64(x + i));
    const float64x2_t q = vrndmq_f64(vmulq_f64(v, PI));
    float64x2_t r = vfmsq_f64(v, q, P);
    r = vbslq_f64(vcltq_f64(r, Z), vaddq_f64(r, P), r);
    r = vbslq_f64(vcgeq_f64(r, P), vsubq_f64(r, P), r);
    vst1q_f64(y + i, r);
  }
  for (; i < len; ++i) {
    const double v = std::fma(c, x[i], y[i]);
    const double q = std::floor(v * m.inv);
    double r = std::fma(-q, m.p, v);
    if (r < 0) r += m.p;
    if (r >= m.p) r -= m.p;
    y[i] = r;
  }
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    const uint8x16_t counts = vcntq_u8(vreinterpretq_u8_u64(v));
    total += vaddlvq_u8(counts);
  }
  for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace regspec::kernels::neon
