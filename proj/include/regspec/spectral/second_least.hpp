#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "regspec/graph/families.hpp"
#include "regspec/graph/graph.hpp"

namespace regspec {

/// Structural match of a graph against the families whose second least
/// eigenvalue exceeds -1: K_{m,n}, A(l,m,n), B(l,m,n,p).
struct SecondLeastFamilyMatch {
  FamilyTag tag = FamilyTag::CompleteBipartite;  // CompleteBipartite, AGraph or BGraph
  std::vector<long> params;
  /// The parameter condition in its published form:
  ///   A: n = 1; n = l = 2; n >= 2 and l = m = 1; n >= 2, l = 1
  ///   B: (p + l - pl)(m + n - mn) > (p - 1)(n - 1)
  bool condition_as_stated = false;
  /// The form that matches the exact eigenvalue comparison:
  ///   A: the third case read as n >= 2, l = 2, m = 1
  ///   B: additionally p + l - pl > 0 and m + n - mn > 0
  bool condition_refined = false;
};

struct SecondLeastReport {
  /// lambda_{n-1}, the second smallest eigenvalue counted with
  /// multiplicity, compared with -1.
  std::strong_ordering second_least_vs_minus_one = std::strong_ordering::equal;
  /// The second smallest distinct eigenvalue compared with -1; absent when
  /// there is only one distinct eigenvalue.
  std::optional<std::strong_ordering> second_distinct_vs_minus_one;
  /// Filled whenever the false-twin quotient has one of the three shapes,
  /// independently of the eigenvalue comparison.
  std::optional<SecondLeastFamilyMatch> family;
};

/// Requires a connected graph on at least two vertices (Error InvalidArgument).
SecondLeastReport second_least_classification(const Graph& g);

/// Structural recognition only: quotient by classes of non-adjacent vertices
/// with equal neighbourhoods, then matching K2, the path P4 with a singleton
/// end, or the 4-cycle with two pendants on adjacent vertices.
std::optional<SecondLeastFamilyMatch> match_second_least_family(const Graph& g);

}  // namespace regspec
