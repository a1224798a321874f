#include "regspec/spectral/taxonomy.hpp"

#include <vector>

#include "regspec/error.hpp"

namespace regspec {

namespace {

[[noreturn]] void inconsistent(const Spectrum& s, const std::string& why) {
  throw Error(Errc::InconsistentSpectrum, s.to_string() + ": " + why);
}

// The irrational entries form one conjugate set of the given degree sharing
// a multiplicity, which is returned.
std::optional<std::size_t> conjugate_set(const std::vector<const SpectrumEntry*>& irr, int degree) {
  if (irr.empty() || static_cast<int>(irr.size()) != degree) return std::nullopt;
  const IntPolynomial f = irr.front()->value.defining_polynomial();
  if (f.degree() != degree) return std::nullopt;
  for (const auto* e : irr) {
    if (e->multiplicity != irr.front()->multiplicity || !(e->value.defining_polynomial() == f)) return std::nullopt;
  }
  return irr.front()->multiplicity;
}

}  // namespace

std::string_view taxonomy_code(TaxonomyCase c) noexcept {
  switch (c) {
    case TaxonomyCase::ThreeOrMoreSimple: return "1";
    case TaxonomyCase::TwoSimpleIntegral: return "2a";
    case TaxonomyCase::TwoSimpleQuadratic: return "2b";
    case TaxonomyCase::OneSimpleAllIntegral: return "3a";
    case TaxonomyCase::OneSimpleQuadraticPair: return "3b";
    case TaxonomyCase::OneSimpleCubicTriple: return "3c";
    case TaxonomyCase::NotFourEigenvalue: return "none";
  }
  return "none";
}

std::string_view taxonomy_name(TaxonomyCase c) noexcept {
  switch (c) {
    case TaxonomyCase::ThreeOrMoreSimple: return "ThreeOrMoreSimple";
    case TaxonomyCase::TwoSimpleIntegral: return "TwoSimpleIntegral";
    case TaxonomyCase::TwoSimpleQuadratic: return "TwoSimpleQuadratic";
    case TaxonomyCase::OneSimpleAllIntegral: return "OneSimpleAllIntegral";
    case TaxonomyCase::OneSimpleQuadraticPair: return "OneSimpleQuadraticPair";
    case TaxonomyCase::OneSimpleCubicTriple: return "OneSimpleCubicTriple";
    case TaxonomyCase::NotFourEigenvalue: return "NotFourEigenvalue";
  }
  return "NotFourEigenvalue";
}

TaxonomyLabel classify_four(const Spectrum& s) {
  if (s.distinct() != 4) return {};
  const auto& top = s.entries().front();
  if (!top.value.is_integer() || top.multiplicity != 1) inconsistent(s, "largest eigenvalue must be a simple integer");

  std::vector<const SpectrumEntry*> irr;
  for (const auto& e : s.entries()) {
    if (!e.value.is_integer()) irr.push_back(&e);
  }
  const std::size_t simple = s.simple_count();
  if (simple >= 3) return {TaxonomyCase::ThreeOrMoreSimple, std::nullopt, std::nullopt};

  if (simple == 2) {
    if (irr.empty()) return {TaxonomyCase::TwoSimpleIntegral, std::nullopt, std::nullopt};
    if (conjugate_set(irr, 2)) return {TaxonomyCase::TwoSimpleQuadratic, std::nullopt, std::nullopt};
    inconsistent(s, "two simple eigenvalues but the irrational ones are not one conjugate pair");
  }

  if (irr.empty()) return {TaxonomyCase::OneSimpleAllIntegral, std::nullopt, std::nullopt};
  if (conjugate_set(irr, 2)) return {TaxonomyCase::OneSimpleQuadraticPair, std::nullopt, std::nullopt};
  if (const auto m = conjugate_set(irr, 3)) {
    const std::size_t n = s.order();
    if (3 * *m + 1 != n) inconsistent(s, "cubic triple multiplicity is not (n-1)/3");
    const Integer& k = top.value.value();
    if (k != static_cast<unsigned long>(*m) && k != static_cast<unsigned long>(2 * *m)) inconsistent(s, "degree is neither m nor 2m");
    return {TaxonomyCase::OneSimpleCubicTriple, *m, static_cast<std::size_t>(k.get_ui())};
  }
  inconsistent(s, "irrational eigenvalues fit no admissible shape");
}

}  // namespace regspec
