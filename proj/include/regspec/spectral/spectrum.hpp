#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regspec/algebra/algebraic.hpp"
#include "regspec/algebra/factor.hpp"
#include "regspec/algebra/polynomial.hpp"
#include "regspec/graph/graph.hpp"

namespace regspec {

struct SpectrumEntry {
  AlgebraicNumber value;
  std::size_t multiplicity = 0;
};

/// Multiset of real algebraic numbers, largest value first, equal values
/// merged, zero multiplicities dropped.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<SpectrumEntry> entries);

  /// Roots of every irreducible factor, each with the factor's multiplicity.
  /// Throws Error(UnsplitResidual) if any factor is flagged unsplit.
  static Spectrum from_factors(const std::vector<Factor>& factors);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::size_t order() const noexcept;
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const AlgebraicNumber& largest() const;
  const AlgebraicNumber& least() const;
  /// i-th smallest value counted with multiplicity, i = 0 being the least.
  const AlgebraicNumber& nth_smallest(std::size_t i) const;

  std::size_t multiplicity(const AlgebraicNumber& x) const;
  bool contains(const AlgebraicNumber& x) const { return multiplicity(x) > 0; }
  std::size_t simple_count() const noexcept;
  bool all_integral() const noexcept;

  /// Sum of multiplicity * value^r. Defined only when every irrational value
  /// appears together with all its conjugates at equal multiplicity.
  std::optional<Integer> power_sum(unsigned r) const;
  /// prod (x - value)^multiplicity under the same condition.
  std::optional<IntPolynomial> characteristic_polynomial() const;

  /// "{[3]^1, [-1]^3}"
  std::string to_string() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b);

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Exact adjacency spectrum.
Spectrum spectrum(const Graph& g);
Spectrum spectrum_of_polynomial(const IntPolynomial& char_poly);

/// Spectrum of G ⊛ J_m from that of G: lambda -> m*lambda + m - 1, plus -1
/// with multiplicity n(m - 1).
Spectrum clique_expand_spectrum(const Spectrum& s, std::size_t m);
/// Spectrum of the complement of a k-regular graph on n vertices: one copy
/// of k becomes n - k - 1, every other value lambda becomes -1 - lambda.
Spectrum complement_spectrum(const Spectrum& s, const Integer& k);

/// The same maps on characteristic polynomials, needing no factorization:
///   G ⊛ J_m        m^n p((x + 1 - m) / m) (x + 1)^(n(m-1))
///   complement     (x - (n-k-1)) (-1)^(n-1) r(-1 - x),  p = (x - k) r
IntPolynomial clique_expand_char_poly(const IntPolynomial& p, std::size_t m);
IntPolynomial complement_char_poly(const IntPolynomial& p, const Integer& k);

}  // namespace regspec
