#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regspec/graph/graph.hpp"

namespace regspec {

enum class FamilyTag {
  CompleteK,
  CycleC,
  CompleteBipartite,
  CompleteMultipartite,
  Crown,
  KssExpand,
  CrownExpand,
  ComplementCrownExpand,
  AGraph,
  BGraph,
  IncidenceGraph,
};

/// Kebab-case name used on the command line, e.g. "kss-expand".
std::string_view family_name(FamilyTag tag) noexcept;
std::optional<FamilyTag> family_from_name(std::string_view name) noexcept;

using IncidenceMatrix = std::vector<std::vector<std::uint8_t>>;

/// Named family with its integer parameters.
///
///   CompleteK(n)                n >= 1
///   CycleC(n)                   n >= 3
///   CompleteBipartite(m, n)     m, n >= 1
///   CompleteMultipartite(n1..ns) s >= 1, every ni >= 1
///   Crown(s)                    s >= 2
///   KssExpand(s, t)             s, t >= 1     K_{s,s} ⊛ J_t
///   CrownExpand(s, t)           s >= 3, t >= 1  crown(s) ⊛ J_t
///   ComplementCrownExpand(s, t) s >= 3, t >= 1
///   AGraph(l, m, n)             l, m, n >= 1
///   BGraph(l, m, n, p)          l, m, n, p >= 1
///   IncidenceGraph              points x blocks 0/1 matrix in `incidence`;
///                               params optionally (v, k, lambda)
struct FamilyDescriptor {
  FamilyTag tag = FamilyTag::CompleteK;
  std::vector<long> params;
  IncidenceMatrix incidence;

  std::string to_string() const;
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// Throws Error(ParameterOutOfRange) when params violate the ranges above.
void validate(const FamilyDescriptor& desc);

/// Vertex labelings:
///   K_n, C_n            0..n-1, C_n has edges i ~ i+1 (mod n)
///   multipartite        parts occupy consecutive blocks in parameter order
///   Crown(s)            i in [0,s) ~ s+j for i != j
///   X ⊛ J_t             (v, i) -> v*t + i
///   ComplementCrownExpand  complement of CrownExpand under that labeling
///   AGraph              L = [0,l), M next, N next, pendant last;
///                       joins L-M, M-N, N-pendant
///   BGraph              L, M, N, P blocks, then y (joined to N), z (joined
///                       to P); joins L-N, L-M, N-P, M-P
///   IncidenceGraph      points 0..v-1 then blocks v..v+b-1
Graph construct(const FamilyDescriptor& desc);

/// v, b, r, k, lambda of a balanced incomplete block design.
struct DesignParams {
  long v = 0, b = 0, r = 0, k = 0, lambda = 0;

  bool is_symmetric() const noexcept { return r == k; }
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Checks every point pair meets in the same number of blocks, constant
/// replication and block size, vr = bk and lambda(v-1) = r(k-1).
/// Throws Error(ParameterOutOfRange) if the matrix is not a BIBD.
DesignParams design_params(const IncidenceMatrix& incidence);

/// Development of a difference set D in Z_v: block i is D + i.
IncidenceMatrix cyclic_design(long v, const std::vector<long>& base_block);

Graph incidence_graph(const IncidenceMatrix& incidence);

}  // namespace regspec
