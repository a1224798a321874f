#pragma once

// Word-size modular linear algebra. Results are lifted back to the integers
// only through explicit magnitude bounds, so every caller stays exact.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "regspec/algebra/bigint.hpp"
#include "regspec/algebra/int_matrix.hpp"
#include "regspec/algebra/polynomial.hpp"
#include "regspec/kernels/kernels.hpp"

namespace regspec::modular {

using kernels::Modulus;

/// Distinct primes below 2^26 whose product exceeds `bound` (bound >= 0).
std::vector<std::uint32_t> primes_exceeding(const Integer& bound);

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept;
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(const Integer& z, std::uint32_t p);

/// Residues in [0, p) stored as doubles for the vector kernels.
class ResidueMatrix {
 public:
  explicit ResidueMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

ResidueMatrix reduce(const IntMatrix& m, const Modulus& mod);
ResidueMatrix identity(std::size_t n);
ResidueMatrix multiply(const ResidueMatrix& a, const ResidueMatrix& b, const Modulus& mod);

/// Characteristic polynomial det(xI - M) mod p, lowest degree first, via
/// reduction to upper Hessenberg form.
std::vector<std::uint32_t> charpoly_mod(ResidueMatrix m, const Modulus& mod);

/// f(M) mod p by Horner's rule.
ResidueMatrix evaluate(const IntPolynomial& f, const ResidueMatrix& m, const Modulus& mod);

/// Incremental Chinese remaindering into the symmetric range (-M/2, M/2].
class CrtAccumulator {
 public:
  void add(std::uint32_t residue, std::uint32_t prime);
  Integer symmetric() const;
  const Integer& modulus() const noexcept { return modulus_; }

 private:
  Integer value_ = 0;
  Integer modulus_ = 1;
};

}  // namespace regspec::modular
