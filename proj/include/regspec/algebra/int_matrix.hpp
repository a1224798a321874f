#pragma once

#include <cstddef>
#include <vector>

#include "regspec/algebra/bigint.hpp"

namespace regspec {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, Integer(0)) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_symmetric() const;
  Integer trace() const;
  /// Largest absolute row sum; bounds the modulus of every eigenvalue.
  Integer max_abs_row_sum() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

}  // namespace regspec
