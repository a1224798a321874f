#include "regspec/spectral/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "regspec/algebra/charpoly.hpp"
#include "regspec/error.hpp"

namespace regspec {

namespace {

// Power sums p_1..p_r of the roots of a monic f, by Newton's identities.
std::vector<Integer> newton_power_sums(const IntPolynomial& f, unsigned r) {
  const int d = f.degree();
  // a(i) is the coefficient of x^(d-i).
  auto a = [&](int i) -> Integer { return i <= d ? f.coefficient(static_cast<std::size_t>(d - i)) : Integer(0); };
  std::vector<Integer> p(r + 1, 0);
  p[0] = d;
  for (unsigned k = 1; k <= r; ++k) {
    Integer s = static_cast<long>(k) * a(static_cast<int>(k));
    for (unsigned i = 1; i < k; ++i) s += a(static_cast<int>(i)) * p[k - i];
    p[k] = -s;
  }
  return p;
}

// Groups irrational values by defining polynomial; nullopt unless each group
// is a full conjugate set with one common multiplicity.
std::optional<std::vector<std::pair<IntPolynomial, std::size_t>>> conjugate_groups(const std::vector<SpectrumEntry>& es) {
  std::map<std::string, std::pair<IntPolynomial, std::vector<std::size_t>>> groups;
  for (const auto& e : es) {
    IntPolynomial f = e.value.defining_polynomial();
    auto& g = groups[f.to_string()];
    g.first = std::move(f);
    g.second.push_back(e.multiplicity);
  }
  std::vector<std::pair<IntPolynomial, std::size_t>> out;
  for (auto& [key, g] : groups) {
    const auto& mults = g.second;
    if (static_cast<int>(mults.size()) != g.first.degree()) return std::nullopt;
    if (std::adjacent_find(mults.begin(), mults.end(), std::not_equal_to<>()) != mults.end()) return std::nullopt;
    out.emplace_back(std::move(g.first), mults.front());
  }
  return out;
}

}  // namespace

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
  std::erase_if(entries, [](const SpectrumEntry& e) { return e.multiplicity == 0; });
  std::sort(entries.begin(), entries.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return compare(a.value, b.value) > 0; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().value == e.value) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

Spectrum Spectrum::from_factors(const std::vector<Factor>& factors) {
  std::vector<SpectrumEntry> es;
  for (const auto& f : factors) {
    if (f.unsplit) throw Error(Errc::UnsplitResidual, "factor " + f.poly.to_string() + " was not split");
    for (auto& r : AlgebraicNumber::roots_of(f.poly)) es.push_back({std::move(r), f.multiplicity});
  }
  return Spectrum(std::move(es));
}

std::size_t Spectrum::order() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.multiplicity;
  return n;
}

const AlgebraicNumber& Spectrum::largest() const {
  if (entries_.empty()) throw Error(Errc::InvalidArgument, "empty spectrum");
  return entries_.front().value;
}

const AlgebraicNumber& Spectrum::least() const {
  if (entries_.empty()) throw Error(Errc::InvalidArgument, "empty spectrum");
  return entries_.back().value;
}

const AlgebraicNumber& Spectrum::nth_smallest(std::size_t i) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (i < it->multiplicity) return it->value;
    i -= it->multiplicity;
  }
  throw Error(Errc::InvalidArgument, "nth_smallest: index beyond the order");
}

std::size_t Spectrum::multiplicity(const AlgebraicNumber& x) const {
  for (const auto& e : entries_) {
    if (e.value == x) return e.multiplicity;
  }
  return 0;
}

std::size_t Spectrum::simple_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const SpectrumEntry& e) { return e.multiplicity == 1; }));
}

bool Spectrum::all_integral() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const SpectrumEntry& e) { return e.value.is_integer(); });
}

std::optional<Integer> Spectrum::power_sum(unsigned r) const {
  const auto groups = conjugate_groups(entries_);
  if (!groups) return std::nullopt;
  Integer total = 0;
  for (const auto& [f, mult] : *groups) total += newton_power_sums(f, r)[r] * static_cast<unsigned long>(mult);
  return total;
}

std::optional<IntPolynomial> Spectrum::characteristic_polynomial() const {
  const auto groups = conjugate_groups(entries_);
  if (!groups) return std::nullopt;
  IntPolynomial acc = IntPolynomial::constant(1);
  for (const auto& [f, mult] : *groups) acc = acc * pow(f, static_cast<unsigned>(mult));
  return acc;
}

std::string Spectrum::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    os << (i ? ", " : "") << '[' << entries_[i].value.to_string() << "]^" << entries_[i].multiplicity;
  }
  os << '}';
  return os.str();
}

bool operator==(const Spectrum& a, const Spectrum& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].multiplicity != b.entries_[i].multiplicity) return false;
    if (a.entries_[i].value != b.entries_[i].value) return false;
  }
  return true;
}

Spectrum spectrum_of_polynomial(const IntPolynomial& char_poly) {
  return Spectrum::from_factors(factor_over_rationals(char_poly));
}

Spectrum spectrum(const Graph& g) {
  if (g.order() == 0) return {};
  return spectrum_of_polynomial(char_poly(g.adjacency_matrix()));
}

Spectrum clique_expand_spectrum(const Spectrum& s, std::size_t m) {
  if (m == 0) throw Error(Errc::ParameterOutOfRange, "clique_expand_spectrum: m must be >= 1");
  const Integer mm(static_cast<unsigned long>(m));
  std::vector<SpectrumEntry> es;
  for (const auto& e : s.entries()) es.push_back({affine_map(e.value, mm, Integer(mm - 1)), e.multiplicity});
  es.push_back({AlgebraicNumber(-1), s.order() * (m - 1)});
  return Spectrum(std::move(es));
}

Spectrum complement_spectrum(const Spectrum& s, const Integer& k) {
  const std::size_t k_mult = s.multiplicity(AlgebraicNumber(k));
  if (k_mult == 0) throw Error(Errc::NotAnEigenvalue, "complement_spectrum: degree " + k.get_str() + " is not an eigenvalue");
  const Integer n(static_cast<unsigned long>(s.order()));
  std::vector<SpectrumEntry> es;
  es.push_back({AlgebraicNumber(Integer(n - k - 1)), 1});
  for (const auto& e : s.entries()) {
    const std::size_t mult = e.value == AlgebraicNumber(k) ? e.multiplicity - 1 : e.multiplicity;
    es.push_back({affine_map(e.value, Integer(-1), Integer(-1)), mult});
  }
  return Spectrum(std::move(es));
}

IntPolynomial clique_expand_char_poly(const IntPolynomial& p, std::size_t m) {
  if (m == 0) throw Error(Errc::ParameterOutOfRange, "clique_expand_char_poly: m must be >= 1");
  const int n = p.degree();
  const Integer mm(static_cast<unsigned long>(m));
  std::vector<Integer> scaled(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) scaled[static_cast<std::size_t>(i)] = p.coefficient(static_cast<std::size_t>(i)) * ipow(mm, static_cast<unsigned long>(n - i));
  const IntPolynomial head = IntPolynomial(std::move(scaled)).compose_affine(Integer(1), Integer(1 - mm));
  return head * pow(IntPolynomial{1, 1}, static_cast<unsigned>(static_cast<std::size_t>(n) * (m - 1)));
}

IntPolynomial complement_char_poly(const IntPolynomial& p, const Integer& k) {
  auto [r, rem] = divmod_monic(p, IntPolynomial::linear_root(k));
  if (!rem.is_zero()) throw Error(Errc::NotAnEigenvalue, "complement_char_poly: degree " + k.get_str() + " is not a root");
  const int n = p.degree();
  IntPolynomial mirrored = r.compose_affine(Integer(-1), Integer(-1));
  if ((n - 1) % 2 != 0) mirrored = mirrored.negated();
  return IntPolynomial::linear_root(Integer(n - k - 1)) * mirrored;
}

}  // namespace regspec
