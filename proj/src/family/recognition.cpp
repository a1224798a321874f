#include "regspec/family/recognition.hpp"

#include "regspec/error.hpp"
#include "regspec/graph/canonical.hpp"

namespace regspec {

namespace {

std::vector<SpectrumEntry> entries(std::initializer_list<std::pair<long, long>> es) {
  std::vector<SpectrumEntry> out;
  for (const auto& [x, m] : es) {
    if (m < 0) throw Error(Errc::ParameterOutOfRange, "negative multiplicity in closed form");
    out.push_back({AlgebraicNumber(x), static_cast<std::size_t>(m)});
  }
  return out;
}

// sign * sqrt(z) for z >= 0, as an integer or (0 +- sqrt(4z))/2.
AlgebraicNumber signed_sqrt(const Integer& z, int sign) {
  if (is_perfect_square(z)) return AlgebraicNumber(Integer(sign * isqrt(z)));
  return AlgebraicNumber::quadratic(0, Integer(4 * z), sign);
}

std::optional<FamilyDescriptor> confirm(const Graph& g, FamilyTag tag, long s, long t) {
  FamilyDescriptor d{tag, {s, t}, {}};
  try {
    validate(d);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (are_isomorphic(g, construct(d))) return d;
  return std::nullopt;
}

}  // namespace

Spectrum family_spectrum(const FamilyDescriptor& d) {
  validate(d);
  const auto& p = d.params;
  switch (d.tag) {
    case FamilyTag::CompleteK:
      return Spectrum(entries({{p[0] - 1, 1}, {-1, p[0] - 1}}));
    case FamilyTag::CompleteBipartite: {
      const Integer mn = Integer(p[0]) * p[1];
      return Spectrum({{signed_sqrt(mn, 1), 1}, {AlgebraicNumber(0), static_cast<std::size_t>(p[0] + p[1] - 2)}, {signed_sqrt(mn, -1), 1}});
    }
    case FamilyTag::Crown: {
      const long s = p[0];
      return Spectrum(entries({{s - 1, 1}, {1, s - 1}, {-1, s - 1}, {1 - s, 1}}));
    }
    case FamilyTag::KssExpand: {
      const long s = p[0], t = p[1];
      return Spectrum(entries({{s * t + t - 1, 1}, {-s * t + t - 1, 1}, {t - 1, 2 * s - 2}, {-1, 2 * s * (t - 1)}}));
    }
    case FamilyTag::CrownExpand: {
      const long s = p[0], t = p[1];
      return Spectrum(entries({{s * t - 1, 1}, {-s * t + 2 * t - 1, 1}, {2 * t - 1, s - 1}, {-1, 2 * s * t - s - 1}}));
    }
    case FamilyTag::ComplementCrownExpand: {
      const long s = p[0], t = p[1];
      return Spectrum(entries({{s * t, 1}, {s * t - 2 * t, 1}, {-2 * t, s - 1}, {0, 2 * s * t - s - 1}}));
    }
    case FamilyTag::IncidenceGraph: {
      const DesignParams dp = design_params(d.incidence);
      const Integer rk = Integer(dp.r) * dp.k, rl(dp.r - dp.lambda);
      const auto v1 = static_cast<std::size_t>(dp.v - 1);
      return Spectrum({{signed_sqrt(rk, 1), 1},
                       {signed_sqrt(rl, 1), v1},
                       {AlgebraicNumber(0), static_cast<std::size_t>(dp.b - dp.v)},
                       {signed_sqrt(rl, -1), v1},
                       {signed_sqrt(rk, -1), 1}});
    }
    case FamilyTag::CycleC:
    case FamilyTag::CompleteMultipartite:
    case FamilyTag::AGraph:
    case FamilyTag::BGraph:
      break;
  }
  throw Error(Errc::NoClosedForm, d.to_string() + " has no closed-form spectrum here");
}

std::optional<FamilyDescriptor> recognize(const Graph& g) {
  const std::size_t n = g.order();
  const auto k = regular_degree(g);
  if (!k || n < 2 || n % 2 != 0 || !is_connected(g)) return std::nullopt;
  const long half = static_cast<long>(n / 2), deg = static_cast<long>(*k);

  // n = 2st, k = st + t - 1
  if (const long t = deg - half + 1; t >= 1 && half % t == 0) {
    if (auto d = confirm(g, FamilyTag::KssExpand, half / t, t)) return d;
  }
  // n = 2st, k = st - 1 or k = st; every factorization with s >= 3
  for (long s = 3; s <= half; ++s) {
    if (half % s != 0) continue;
    if (deg == half - 1) {
      if (auto d = confirm(g, FamilyTag::CrownExpand, s, half / s)) return d;
    }
  }
  for (long s = 3; s <= half; ++s) {
    if (half % s != 0) continue;
    if (deg == half) {
      if (auto d = confirm(g, FamilyTag::ComplementCrownExpand, s, half / s)) return d;
    }
  }
  return std::nullopt;
}

bool is_characterized_member(const FamilyDescriptor& d) {
  if (d.params.size() != 2) return false;
  if (d.tag == FamilyTag::KssExpand) return d.params[0] >= 2 && d.params[1] >= 2;
  if (d.tag == FamilyTag::CrownExpand) return d.params[0] >= 3 && d.params[1] >= 1;
  return false;
}

ClassMembership class_membership(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !regular_degree(g)) return {};
  return class_membership(g, spectrum(g));
}

ClassMembership class_membership(const Graph& g, const Spectrum& s) {
  ClassMembership m;
  if (g.order() == 0 || !is_connected(g) || !regular_degree(g)) return m;
  if (s.distinct() == 4) {
    m.g42 = s.simple_count() == 2;
    m.g42_minus1 = m.g42 && s.contains(AlgebraicNumber(-1));
    m.g42_zero = m.g42 && s.contains(AlgebraicNumber(0));
    m.g4_ge_minus1 = s.nth_smallest(1) >= AlgebraicNumber(-1);
  }
  m.recognized = recognize(g);
  return m;
}

}  // namespace regspec
