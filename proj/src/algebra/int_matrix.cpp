#include "regspec/algebra/int_matrix.hpp"

#include "regspec/error.hpp"

namespace regspec {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::max_abs_row_sum() const {
  Integer best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += abs((*this)(i, j));
    if (s > best) best = s;
  }
  return best;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(Errc::InvalidArgument, "matrix size mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(Errc::InvalidArgument, "matrix size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.entries_[i] + b.entries_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw Error(Errc::InvalidArgument, "matrix size mismatch");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = a.entries_[i] - b.entries_[i];
  return c;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] = k * a.entries_[i];
  return c;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Integer(-a(n - 1, n - 1));
}

}  // namespace regspec
