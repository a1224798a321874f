#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "regspec/family/recognition.hpp"
#include "regspec/graph/graph.hpp"
#include "regspec/spectral/spectrum.hpp"
#include "regspec/spectral/structure.hpp"
#include "regspec/spectral/taxonomy.hpp"

namespace regspec {

/// Halves partition attempt for one simple integer eigenvalue other than k.
struct PartitionFinding {
  Integer lambda;
  std::optional<RegularPartition> partition;
  /// Error code name when no partition exists.
  std::optional<std::string> error;
  /// When every eigenvalue is integral.
  std::optional<DivisibilityResult> divisibility;
};

struct AnalysisReport {
  std::string graph6;
  std::size_t order = 0;
  std::optional<std::size_t> degree;
  bool connected = false;
  bool bipartite = false;
  Spectrum spectrum;
  /// Connected regular graphs only.
  std::optional<TaxonomyLabel> taxonomy;
  bool walk_regular = false;
  /// lambda_{n-1}, counted with multiplicity; n >= 2.
  std::optional<AlgebraicNumber> second_least;
  /// Connected regular graphs with n >= 2.
  std::vector<PartitionFinding> partitions;
  ClassMembership membership;
};

AnalysisReport analyze(const Graph& g);

/// Human-readable table, one "key  value" line each.
std::string to_text(const AnalysisReport& r);

}  // namespace regspec
