#include "regspec/graph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "regspec/error.hpp"
#include "regspec/kernels/kernels.hpp"

namespace regspec {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw Error(Errc::InvalidArgument, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw Error(Errc::InvalidArgument, "vertex out of range");
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = bits_[v * words_ + w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t v) const noexcept {
  return static_cast<std::size_t>(kernels::and_popcount(row(u), row(v)));
}

IntMatrix Graph::adjacency_matrix() const {
  IntMatrix m(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (adjacent(u, v)) m(u, v) = 1;
  return m;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw Error(Errc::InvalidArgument, "relabeled: permutation size mismatch");
  Graph h(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v : neighbors(u)) {
      if (u < v) h.add_edge(perm[u], perm[v]);
    }
  }
  return h;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

BasicPredicates basic_predicates(const Graph& g) {
  BasicPredicates p;
  p.is_connected = is_connected(g);
  p.degree = regular_degree(g);
  p.is_regular = p.degree.has_value();
  p.is_bipartite = two_coloring(g).has_value();
  return p;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph h(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph clique_expand(const Graph& g, std::size_t m) {
  if (m == 0) throw Error(Errc::ParameterOutOfRange, "clique_expand: m must be >= 1");
  const std::size_t n = g.order();
  Graph h(n * m);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) h.add_edge(v * m + i, v * m + j);
  }
  for (const auto& [u, v] : g.edges()) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) h.add_edge(u * m + i, v * m + j);
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (const auto& [u, v] : a.edges()) h.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) h.add_edge(a.order() + u, a.order() + v);
  return h;
}

}  // namespace regspec
