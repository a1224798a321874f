#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "regspec/spectral/spectrum.hpp"

namespace regspec {

/// Shapes of the spectrum of a connected regular graph with four distinct
/// eigenvalues, by number of simple eigenvalues and their arithmetic.
enum class TaxonomyCase {
  ThreeOrMoreSimple,       // 1
  TwoSimpleIntegral,       // 2a
  TwoSimpleQuadratic,      // 2b: two integers, one conjugate pair (a +- sqrt b)/2
  OneSimpleAllIntegral,    // 3a
  OneSimpleQuadraticPair,  // 3b
  OneSimpleCubicTriple,    // 3c: three conjugate cubic roots of multiplicity (n-1)/3
  NotFourEigenvalue,
};

struct TaxonomyLabel {
  TaxonomyCase kind = TaxonomyCase::NotFourEigenvalue;
  /// 3c only: the common multiplicity m = (n - 1)/3 and the degree k,
  /// which is m or 2m.
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;

  friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
};

/// "1", "2a", ..., "3c", or "none".
std::string_view taxonomy_code(TaxonomyCase c) noexcept;
/// "TwoSimpleIntegral" etc.
std::string_view taxonomy_name(TaxonomyCase c) noexcept;

/// Exactly four distinct values are required for a label other than
/// NotFourEigenvalue. Throws Error(InconsistentSpectrum) when the largest
/// value is not a simple integer, a conjugate set is split across different
/// multiplicities, or no shape fits.
TaxonomyLabel classify_four(const Spectrum& s);

}  // namespace regspec
