#include <atomic>
#include <cstdlib>
#include <string>

#include "regspec/error.hpp"
#include "regspec/kernels/kernels.hpp"

namespace regspec::kernels {

Modulus::Modulus(std::uint32_t prime)
    : value(prime), p(static_cast<double>(prime)), inv(1.0 / static_cast<double>(prime)) {
  if (prime < 3 || prime >= kModulusLimit) {
    throw Error(Errc::InvalidArgument, "modulus out of range: " + std::to_string(prime));
  }
}

std::string_view name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::axpy_mod, &scalar::and_popcount};
#if defined(REGSPEC_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::axpy_mod, &avx2::and_popcount};
#endif
#if defined(REGSPEC_HAVE_NEON)
constexpr KernelTable kNeon{Isa::Neon, &neon::axpy_mod, &neon::and_popcount};
#endif

bool cpu_has_avx2() noexcept {
#if defined(REGSPEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* pick_default() noexcept {
  if (const char* env = std::getenv("REGSPEC_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (want == name(isa)) {
        if (const KernelTable* t = table_for(isa)) return t;
      }
    }
  }
  if (const KernelTable* t = table_for(Isa::Avx2)) return t;
  if (const KernelTable* t = table_for(Isa::Neon)) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{pick_default()};
  return current;
}

}  // namespace

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return &kScalar;
    case Isa::Avx2:
#if defined(REGSPEC_HAVE_AVX2)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(REGSPEC_HAVE_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (table_for(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

void select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (t == nullptr) throw Error(Errc::InvalidArgument, std::string("kernel ISA not available: ") + std::string(name(isa)));
  slot().store(t, std::memory_order_release);
}

}  // namespace regspec::kernels
