#pragma once

#include <gmpxx.h>

#include <string>

namespace regspec {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool is_perfect_square(const Integer& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

/// floor(sqrt(z)) for z >= 0.
inline Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& z) {
  if (d == 0) return z == 0;
  return mpz_divisible_p(z.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// num/den in lowest terms; the two-argument mpq_class constructor does not
/// reduce. den must be nonzero.
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace regspec
