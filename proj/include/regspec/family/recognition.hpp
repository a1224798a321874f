#pragma once

#include <optional>

#include "regspec/graph/families.hpp"
#include "regspec/graph/graph.hpp"
#include "regspec/spectral/spectrum.hpp"

namespace regspec {

/// Closed-form spectrum of a family member:
///   CompleteK(n)                {[n-1]^1, [-1]^(n-1)}
///   CompleteBipartite(m, n)     {[sqrt(mn)]^1, [0]^(m+n-2), [-sqrt(mn)]^1}
///   Crown(s)                    {[s-1]^1, [1]^(s-1), [-1]^(s-1), [1-s]^1}
///   KssExpand(s, t)             {[st+t-1]^1, [-st+t-1]^1, [t-1]^(2s-2), [-1]^(2s(t-1))}
///   CrownExpand(s, t)           {[st-1]^1, [-st+2t-1]^1, [2t-1]^(s-1), [-1]^(2st-s-1)}
///   ComplementCrownExpand(s, t) {[st]^1, [st-2t]^1, [-2t]^(s-1), [0]^(2st-s-1)}
///   IncidenceGraph of a BIBD    {[sqrt(rk)]^1, [sqrt(r-lambda)]^(v-1), [0]^(b-v),
///                                [-sqrt(r-lambda)]^(v-1), [-sqrt(rk)]^1}
/// Zero multiplicities are dropped and equal values merged. Throws
/// Error(ParameterOutOfRange) for invalid descriptors and Error(NoClosedForm)
/// for cycles, general multipartite graphs, A and B graphs.
Spectrum family_spectrum(const FamilyDescriptor& desc);

/// KssExpand, CrownExpand or ComplementCrownExpand whose order and degree fit
/// a connected regular graph, confirmed by isomorphism with the constructed
/// member. The first match in that tag order, or none.
std::optional<FamilyDescriptor> recognize(const Graph& g);

/// KssExpand(s, t) with s, t >= 2, or CrownExpand(s, t) with s >= 3, t >= 1:
/// the graphs of the characterization of G(4,2,-1) and G(4,>=-1).
bool is_characterized_member(const FamilyDescriptor& desc);

struct ClassMembership {
  /// Connected, regular, four distinct eigenvalues, exactly two simple.
  bool g42 = false;
  /// g42 with -1 (resp. 0) as an eigenvalue.
  bool g42_minus1 = false;
  bool g42_zero = false;
  /// Connected, regular, four distinct eigenvalues, second least eigenvalue
  /// (counted with multiplicity) at least -1.
  bool g4_ge_minus1 = false;
  std::optional<FamilyDescriptor> recognized;
};

ClassMembership class_membership(const Graph& g);
/// Same, reusing a spectrum already computed for g.
ClassMembership class_membership(const Graph& g, const Spectrum& s);

}  // namespace regspec
