#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regspec/graph/families.hpp"
#include "regspec/graph/graph.hpp"
#include "regspec/spectral/spectrum.hpp"
#include "regspec/spectral/taxonomy.hpp"

namespace regspec {

/// Predicates on the exact spectrum; unset ones accept every graph.
struct EnumFilters {
  std::optional<std::size_t> distinct_eigenvalues;
  std::optional<TaxonomyCase> taxonomy;
  /// Second least eigenvalue lambda_{n-1} (counted with multiplicity) >= bound.
  std::optional<long> second_least_at_least;

  bool empty() const noexcept { return !distinct_eigenvalues && !taxonomy && !second_least_at_least; }
};

struct EnumSpec {
  std::size_t n = 0, k = 0;
  bool connected_only = false;
  EnumFilters filters;
};

struct EnumConfig {
  /// Largest order accepted.
  std::size_t max_order = 12;
  /// Largest number of partial graphs kept in one completion layer.
  std::size_t max_layer = 2'000'000;
  unsigned threads = 1;
  /// Random tie-breaking in the choice of the vertex to complete; the
  /// output does not depend on it.
  std::optional<std::uint64_t> seed;
};

/// One representative per isomorphism class of k-regular graphs on n
/// vertices (connected ones when requested) passing the filters, as the
/// canonical graph, ordered by graph6 text. Errors: InvalidArgument when
/// k > n - 1 or nk is odd, SearchSpaceTooLarge when n > max_order or a
/// layer outgrows max_layer.
///
/// Vertices are completed one at a time: a partial graph has finished
/// vertices of full degree and open ones of smaller degree, and each step
/// joins one open vertex to every admissible set of open vertices. Partial
/// graphs are deduplicated per step by canonical form with finished and
/// open vertices coloured apart. Degrees above (n-1)/2 are generated as
/// complements.
std::vector<Graph> enumerate_regular(const EnumSpec& spec, const EnumConfig& config = {});

/// Streaming form of the above, same order.
void enumerate_regular(const EnumSpec& spec, const EnumConfig& config, const std::function<void(const Graph&)>& sink);

/// Enumerated graphs whose exact spectrum equals target.
std::vector<Graph> cospectral_mates(const Spectrum& target, const EnumSpec& space, const EnumConfig& config = {});

struct CorpusEntry {
  Graph graph;
  std::size_t n = 0, k = 0;
  Spectrum spectrum;
};

/// Every connected regular graph with 1 <= n <= n_max, ordered by (n, k,
/// graph6), with its spectrum.
std::vector<CorpusEntry> regular_corpus(std::size_t n_max, const EnumConfig& config = {});

enum class TheoremId { Thm31, Thm36, Thm39, Thm310, Lem22 };

/// "thm3.1", "thm3.6", "thm3.9", "thm3.10", "lem2.2".
std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct VerifiedMember {
  std::string graph6;
  std::size_t n = 0, k = 0;
  std::optional<FamilyDescriptor> family;
};

struct VerificationReport {
  TheoremId id = TheoremId::Thm31;
  std::string statement;
  std::string search_space;
  std::size_t n_max = 0;
  /// Connected regular graphs per (n, k).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> census;
  /// Graphs with four distinct eigenvalues.
  std::size_t four_eigenvalue_graphs = 0;
  /// Graphs in the class under test, when the statement is a characterization.
  std::vector<VerifiedMember> members;
  /// graph6 of every graph violating the statement, with the reason.
  std::vector<std::pair<std::string, std::string>> counterexamples;

  bool verified() const noexcept { return counterexamples.empty(); }
};

///   thm3.1   no graph with four distinct eigenvalues has three or more simple
///   thm3.6   G(4,>=-1) members are exactly KssExpand(s,t), s,t >= 2, and
///            CrownExpand(s,t), s >= 3, t >= 1
///   thm3.9   the same for G(4,2,-1)
///   thm3.10  G(4,2,0) members are exactly complements of CrownExpand(s,t)
///   lem2.2   every graph with four distinct eigenvalues is walk-regular
/// "Exactly" is checked both ways: every member is recognized as a family
/// graph, and every family graph of order <= n_max is found.
VerificationReport verify_theorem(TheoremId id, std::size_t n_max, const EnumConfig& config = {});

}  // namespace regspec
