#include "regspec/spectral/second_least.hpp"

#include <algorithm>
#include <map>

#include "regspec/algebra/charpoly.hpp"
#include "regspec/algebra/factor.hpp"
#include "regspec/error.hpp"

namespace regspec {

namespace {

struct Quotient {
  std::vector<std::size_t> size;
  std::vector<std::vector<std::size_t>> adj;

  std::size_t degree(std::size_t c) const { return adj[c].size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); }
};

// Classes of vertices with identical neighbourhoods (necessarily
// non-adjacent), in order of first vertex.
Quotient false_twin_quotient(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  std::vector<std::size_t> cls(n);
  Quotient q;
  for (std::size_t v = 0; v < n; ++v) {
    const auto row = g.row(v);
    auto [it, fresh] = index.try_emplace(std::vector<std::uint64_t>(row.begin(), row.end()), q.size.size());
    if (fresh) q.size.push_back(0);
    cls[v] = it->second;
    ++q.size[it->second];
  }
  q.adj.resize(q.size.size());
  for (const auto& [u, v] : g.edges()) {
    const std::size_t a = cls[u], b = cls[v];
    if (!q.adjacent(a, b)) {
      q.adj[a].push_back(b);
      q.adj[b].push_back(a);
    }
  }
  return q;
}

bool a_condition_as_stated(long l, long m, long n) {
  return n == 1 || (n == 2 && l == 2) || (n >= 2 && l == 1 && m == 1) || (n >= 2 && l == 1);
}

bool a_condition_refined(long l, long m, long n) {
  return n == 1 || (n == 2 && l == 2) || (n >= 2 && l == 2 && m == 1) || (n >= 2 && l == 1);
}

std::optional<SecondLeastFamilyMatch> match_path(const Quotient& q) {
  std::vector<std::size_t> ends;
  for (std::size_t c = 0; c < 4; ++c) {
    if (q.degree(c) == 1) ends.push_back(c);
    else if (q.degree(c) != 2) return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<std::size_t> path{ends[0]};
  while (path.size() < 4) {
    for (auto c : q.adj[path.back()]) {
      if (path.size() < 2 || c != path[path.size() - 2]) {
        path.push_back(c);
        break;
      }
    }
  }
  std::optional<SecondLeastFamilyMatch> best;
  for (int dir = 0; dir < 2; ++dir) {
    if (dir == 1) std::reverse(path.begin(), path.end());
    if (q.size[path[3]] != 1) continue;
    const long l = static_cast<long>(q.size[path[0]]), m = static_cast<long>(q.size[path[1]]), n = static_cast<long>(q.size[path[2]]);
    SecondLeastFamilyMatch cand{FamilyTag::AGraph, {l, m, n}, a_condition_as_stated(l, m, n), a_condition_refined(l, m, n)};
    if (!best) {
      best = cand;
      continue;
    }
    const bool better = (cand.condition_refined && !best->condition_refined) ||
                        (cand.condition_refined == best->condition_refined && cand.condition_as_stated && !best->condition_as_stated);
    best->condition_as_stated = best->condition_as_stated || cand.condition_as_stated;
    best->condition_refined = best->condition_refined || cand.condition_refined;
    if (better) best->params = cand.params;
  }
  return best;
}

std::optional<SecondLeastFamilyMatch> match_double_pendant_square(const Quotient& q) {
  std::vector<std::size_t> pendants;
  for (std::size_t c = 0; c < 6; ++c) {
    if (q.degree(c) == 1 && q.size[c] == 1) pendants.push_back(c);
  }
  if (pendants.size() != 2) return std::nullopt;
  const std::size_t y = pendants[0], z = pendants[1];
  const std::size_t nn = q.adj[y][0], pp = q.adj[z][0];
  if (nn == pp || !q.adjacent(nn, pp) || q.degree(nn) != 3 || q.degree(pp) != 3) return std::nullopt;
  auto other = [&](std::size_t c, std::size_t a, std::size_t b) -> std::optional<std::size_t> {
    for (auto d : q.adj[c]) {
      if (d != a && d != b) return d;
    }
    return std::nullopt;
  };
  const auto ll = other(nn, y, pp), mm = other(pp, z, nn);
  if (!ll || !mm || *ll == *mm || !q.adjacent(*ll, *mm) || q.degree(*ll) != 2 || q.degree(*mm) != 2) return std::nullopt;
  std::vector<long> params{static_cast<long>(q.size[*ll]), static_cast<long>(q.size[*mm]), static_cast<long>(q.size[nn]),
                           static_cast<long>(q.size[pp])};
  const std::vector<long> swapped{params[1], params[0], params[3], params[2]};
  params = std::min(params, swapped);
  const long l = params[0], m = params[1], n = params[2], p = params[3];
  const long left = p + l - p * l, right = m + n - m * n;
  const bool stated = left * right > (p - 1) * (n - 1);
  return SecondLeastFamilyMatch{FamilyTag::BGraph, params, stated, stated && left > 0 && right > 0};
}

std::size_t root_multiplicity(IntPolynomial p, const Integer& r) {
  const IntPolynomial lin = IntPolynomial::linear_root(r);
  std::size_t mult = 0;
  while (p.degree() > 0) {
    auto [quo, rem] = divmod_monic(p, lin);
    if (!rem.is_zero()) break;
    p = std::move(quo);
    ++mult;
  }
  return mult;
}

}  // namespace

std::optional<SecondLeastFamilyMatch> match_second_least_family(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return std::nullopt;
  const Quotient q = false_twin_quotient(g);
  switch (q.size.size()) {
    case 2: {
      std::vector<long> params{static_cast<long>(q.size[0]), static_cast<long>(q.size[1])};
      std::sort(params.begin(), params.end());
      return SecondLeastFamilyMatch{FamilyTag::CompleteBipartite, params, true, true};
    }
    case 4:
      return match_path(q);
    case 6:
      return match_double_pendant_square(q);
    default:
      return std::nullopt;
  }
}

SecondLeastReport second_least_classification(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw Error(Errc::InvalidArgument, "second_least_classification: needs a connected graph on at least two vertices");
  }
  const IntPolynomial p = char_poly(g.adjacency_matrix());
  const Rational minus_one(-1);
  const std::size_t below = count_roots_below(p, minus_one);
  const std::size_t at = root_multiplicity(p, Integer(-1));

  SecondLeastReport r;
  if (below >= 2) {
    r.second_least_vs_minus_one = std::strong_ordering::less;
  } else if (below + at >= 2) {
    r.second_least_vs_minus_one = std::strong_ordering::equal;
  } else {
    r.second_least_vs_minus_one = std::strong_ordering::greater;
  }

  const IntPolynomial sq = squarefree_part(p);
  if (sq.degree() >= 2) {
    const std::size_t below_d = count_roots_below(sq, minus_one);
    if (below_d >= 2) {
      r.second_distinct_vs_minus_one = std::strong_ordering::less;
    } else if (below_d == 1 && at > 0) {
      r.second_distinct_vs_minus_one = std::strong_ordering::equal;
    } else {
      r.second_distinct_vs_minus_one = std::strong_ordering::greater;
    }
  }
  r.family = match_second_least_family(g);
  return r;
}

}  // namespace regspec
