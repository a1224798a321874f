#pragma once

// Data-parallel inner loops used by the exact spectral code.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The variant is
// picked once at runtime from the CPU feature set; REGSPEC_ISA=scalar|avx2|neon
// in the environment overrides the choice. All variants must produce
// bit-identical results (see tests/unit/test_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace regspec::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view name(Isa isa) noexcept;

/// Odd prime modulus below 2^26, so that c*x + y stays exact in a double.
struct Modulus {
  explicit Modulus(std::uint32_t prime);

  std::uint32_t value;
  double p;
  double inv;
};

inline constexpr std::uint32_t kModulusLimit = 1u << 26;

struct KernelTable {
  Isa isa;
  /// y[i] <- (y[i] + c * x[i]) mod p for residues in [0, p).
  void (*axpy_mod)(double* y, const double* x, double c, std::size_t len, const Modulus& m);
  /// popcount(a[i] & b[i]) summed over i.
  std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

/// Table selected for this process.
const KernelTable& active() noexcept;

/// Table for a specific ISA, or nullptr when it is not compiled in or the CPU
/// lacks the required features.
const KernelTable* table_for(Isa isa) noexcept;

std::vector<Isa> supported_isas();

/// Forces a specific variant for the rest of the process; throws
/// Error(InvalidArgument) when unsupported.
void select(Isa isa);

inline void axpy_mod(std::span<double> y, std::span<const double> x, double c, const Modulus& m) {
  active().axpy_mod(y.data(), x.data(), c, y.size(), m);
}

inline std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return active().and_popcount(a.data(), b.data(), a.size());
}

// Per-ISA entry points (defined in the per-ISA translation units).
namespace scalar {
void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace scalar

#if defined(REGSPEC_HAVE_AVX2)
namespace avx2 {
void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace avx2
#endif

#if defined(REGSPEC_HAVE_NEON)
namespace neon {
void axpy_mod(double* y, const double* x, double c, std::size_t len, const Modulus& m);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace neon
#endif

}  // namespace regspec::kernels
