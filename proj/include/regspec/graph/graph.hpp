#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "regspec/algebra/int_matrix.hpp"

namespace regspec {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return ((bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
  }
  /// Throws Error(InvalidArgument) for loops or out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  std::span<const std::uint64_t> row(std::size_t v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  std::size_t degree(std::size_t v) const noexcept;
  std::size_t edge_count() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  /// |N(u) ∩ N(v)|
  std::size_t common_neighbors(std::size_t u, std::size_t v) const noexcept;

  IntMatrix adjacency_matrix() const;

  /// Graph with vertex v renamed to perm[v]; perm must be a permutation.
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct BasicPredicates {
  bool is_connected = false;
  bool is_regular = false;
  /// Common degree when regular.
  std::optional<std::size_t> degree;
  bool is_bipartite = false;
};

BasicPredicates basic_predicates(const Graph& g);
bool is_connected(const Graph& g);
std::optional<std::size_t> regular_degree(const Graph& g);
/// 0/1 side per vertex when bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

Graph complement(const Graph& g);

/// G ⊛ J_m: vertex v becomes the clique {v*m, ..., v*m + m - 1}; two cliques
/// are completely joined iff their vertices are adjacent in G.
Graph clique_expand(const Graph& g, std::size_t m);

/// Vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace regspec
