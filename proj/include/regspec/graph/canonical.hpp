#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "regspec/graph/graph.hpp"

namespace regspec {

using Permutation = std::vector<std::size_t>;

struct CanonicalLabeling {
  /// label[v] is the canonical position of vertex v.
  Permutation label;
  /// g.relabeled(label); equal for isomorphic inputs.
  Graph canonical;
  /// Automorphisms discovered during the search (not necessarily a full
  /// generating set of the group).
  std::vector<Permutation> automorphisms;
  std::size_t leaves = 0;
};

/// Individualization-refinement search: equitable refinement of an ordered
/// partition, individualizing vertices of the first non-singleton cell, and
/// keeping the leaf whose relabeled adjacency matrix is lexicographically
/// largest. Subtrees equivalent under discovered automorphisms are skipped.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Vertex-coloured variant: the search starts from one cell per colour in
/// increasing colour order, so colour classes map to fixed position ranges.
/// Error(InvalidArgument) unless colors has one entry per vertex.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<std::uint32_t>& colors);

/// graph6 text of the canonical graph.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Orbit representative (smallest vertex) of every vertex under the group
/// generated by gens.
std::vector<std::size_t> orbit_representatives(std::size_t n, const std::vector<Permutation>& gens);

}  // namespace regspec
