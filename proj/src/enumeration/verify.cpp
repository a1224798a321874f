#include <algorithm>
#include <set>

#include "regspec/enumeration/enumerate.hpp"
#include "regspec/error.hpp"
#include "regspec/family/recognition.hpp"
#include "regspec/graph/canonical.hpp"
#include "regspec/graph/graph6.hpp"
#include "regspec/spectral/structure.hpp"

namespace regspec {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  const char* statement;
};

constexpr TheoremInfo kTheorems[] = {
    {TheoremId::Thm31, "thm3.1", "no connected regular graph with four distinct eigenvalues has three or more simple eigenvalues"},
    {TheoremId::Thm36, "thm3.6",
     "G(4,>=-1) consists exactly of KssExpand(s,t), s,t >= 2, and CrownExpand(s,t), s >= 3, t >= 1"},
    {TheoremId::Thm39, "thm3.9",
     "G(4,2,-1) consists exactly of KssExpand(s,t), s,t >= 2, and CrownExpand(s,t), s >= 3, t >= 1"},
    {TheoremId::Thm310, "thm3.10", "G(4,2,0) consists exactly of the complements of CrownExpand(s,t), s >= 3, t >= 1"},
    {TheoremId::Lem22, "lem2.2", "every connected regular graph with four distinct eigenvalues is walk-regular"},
};

const TheoremInfo& info(TheoremId id) {
  for (const auto& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw Error(Errc::InvalidArgument, "unknown theorem id");
}

// Family graphs of order <= n_max that the characterization predicts.
std::vector<FamilyDescriptor> predicted(TheoremId id, std::size_t n_max) {
  std::vector<FamilyDescriptor> out;
  const long cap = static_cast<long>(n_max);
  if (id == TheoremId::Thm36 || id == TheoremId::Thm39) {
    for (long s = 2; 2 * s * 2 <= cap; ++s)
      for (long t = 2; 2 * s * t <= cap; ++t) out.push_back({FamilyTag::KssExpand, {s, t}, {}});
    for (long s = 3; 2 * s <= cap; ++s)
      for (long t = 1; 2 * s * t <= cap; ++t) out.push_back({FamilyTag::CrownExpand, {s, t}, {}});
  } else if (id == TheoremId::Thm310) {
    for (long s = 3; 2 * s <= cap; ++s)
      for (long t = 1; 2 * s * t <= cap; ++t) out.push_back({FamilyTag::ComplementCrownExpand, {s, t}, {}});
  }
  return out;
}

bool crown_expand_with_range(const std::optional<FamilyDescriptor>& d) {
  return d && d->tag == FamilyTag::CrownExpand && d->params.size() == 2 && d->params[0] >= 3 && d->params[1] >= 1;
}

}  // namespace

std::string theorem_name(TheoremId id) { return info(id).name; }

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (const auto& t : kTheorems) {
    if (name == t.name) return t.id;
  }
  return std::nullopt;
}

std::vector<CorpusEntry> regular_corpus(std::size_t n_max, const EnumConfig& config) {
  if (n_max > config.max_order || n_max > 64) {
    throw Error(Errc::SearchSpaceTooLarge, "regular_corpus: n = " + std::to_string(n_max) + " exceeds the cap " +
                                               std::to_string(std::min<std::size_t>(config.max_order, 64)));
  }
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((n * k) % 2 != 0) continue;
      EnumSpec spec;
      spec.n = n;
      spec.k = k;
      spec.connected_only = true;
      enumerate_regular(spec, config, [&](const Graph& g) { out.push_back({g, n, k, spectrum(g)}); });
    }
  }
  return out;
}

VerificationReport verify_theorem(TheoremId id, std::size_t n_max, const EnumConfig& config) {
  VerificationReport rep;
  rep.id = id;
  rep.statement = info(id).statement;
  rep.n_max = n_max;
  rep.search_space = "connected regular graphs on 1.." + std::to_string(n_max) + " vertices, every degree";

  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      if ((n * k) % 2 == 0) rep.census[{n, k}] = 0;
    }
  }
  const auto corpus = regular_corpus(n_max, config);
  std::set<std::string> found;
  for (const auto& e : corpus) {
    ++rep.census[{e.n, e.k}];
    if (e.spectrum.distinct() != 4) continue;
    ++rep.four_eigenvalue_graphs;
    const std::string text = graph6_encode(e.graph);
    switch (id) {
      case TheoremId::Thm31:
        if (e.spectrum.simple_count() >= 3) {
          rep.counterexamples.emplace_back(text, std::to_string(e.spectrum.simple_count()) + " simple eigenvalues in " +
                                                     e.spectrum.to_string());
        }
        break;
      case TheoremId::Lem22:
        if (!is_walk_regular(e.graph)) rep.counterexamples.emplace_back(text, "not walk-regular");
        break;
      case TheoremId::Thm36:
      case TheoremId::Thm39:
      case TheoremId::Thm310: {
        const ClassMembership cm = class_membership(e.graph, e.spectrum);
        const bool in_class = id == TheoremId::Thm36 ? cm.g4_ge_minus1 : id == TheoremId::Thm39 ? cm.g42_minus1 : cm.g42_zero;
        if (!in_class) break;
        rep.members.push_back({text, e.n, e.k, cm.recognized});
        found.insert(text);
        const bool ok = id == TheoremId::Thm310 ? crown_expand_with_range(recognize(complement(e.graph)))
                                                : cm.recognized && is_characterized_member(*cm.recognized);
        if (!ok) rep.counterexamples.emplace_back(text, "member of the class but not a family graph: " + e.spectrum.to_string());
        break;
      }
    }
  }
  for (const auto& desc : predicted(id, n_max)) {
    const std::string text = canonical_form(construct(desc));
    if (found.count(text) == 0) rep.counterexamples.emplace_back(text, desc.to_string() + " not found in the class");
  }
  return rep;
}

}  // namespace regspec
