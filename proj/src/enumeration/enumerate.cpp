#include "regspec/enumeration/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "regspec/algebra/charpoly.hpp"
#include "regspec/error.hpp"
#include "regspec/graph/canonical.hpp"
#include "regspec/graph/graph6.hpp"

namespace regspec {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kWordLimit = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

Mask row_mask(const Graph& g, std::size_t v) { return g.row(v)[0]; }

// One completion step on a partial graph whose full vertices have degree k.
class Completer {
 public:
  Completer(std::size_t n, std::size_t k, bool connected, std::optional<std::uint64_t> seed)
      : n_(n), k_(k), connected_(connected), seed_(seed) {}

  // Canonical graph6 of every admissible child of g.
  void children(const Graph& g, const std::string& key, std::vector<std::string>& out) const {
    std::vector<std::size_t> deg(n_);
    Mask open = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      deg[v] = g.degree(v);
      if (deg[v] < k_) open |= bit(v);
    }
    const std::size_t v = pick(deg, open, key);
    const std::size_t r = k_ - deg[v];
    const Mask cand = open & ~bit(v) & ~row_mask(g, v);
    if (static_cast<std::size_t>(std::popcount(cand)) < r) return;

    // candidates with equal neighbourhoods are interchangeable: choose counts
    std::map<Mask, std::vector<std::size_t>> by_nbhd;
    for (Mask c = cand; c != 0; c &= c - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(c));
      by_nbhd[row_mask(g, u)].push_back(u);
    }
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [nb, vs] : by_nbhd) classes.push_back(std::move(vs));

    std::vector<std::size_t> chosen;
    choose(g, v, classes, 0, r, chosen, out);
  }

 private:
  std::size_t pick(const std::vector<std::size_t>& deg, Mask open, const std::string& key) const {
    std::size_t best = 0;
    std::vector<std::size_t> ties;
    for (Mask o = open; o != 0; o &= o - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(o));
      if (ties.empty() || deg[v] > best) {
        best = deg[v];
        ties.assign(1, v);
      } else if (deg[v] == best) {
        ties.push_back(v);
      }
    }
    if (!seed_ || ties.size() == 1) return ties.front();
    std::mt19937_64 rng(*seed_ ^ std::hash<std::string>{}(key));
    return ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
  }

  void choose(const Graph& g, std::size_t v, const std::vector<std::vector<std::size_t>>& classes, std::size_t ci,
              std::size_t left, std::vector<std::size_t>& chosen, std::vector<std::string>& out) const {
    if (left == 0) {
      Graph child = g;
      for (auto u : chosen) child.add_edge(v, u);
      if (admissible(child)) out.push_back(graph6_encode(canonical_labeling(child).canonical));
      return;
    }
    if (ci == classes.size()) return;
    std::size_t rest = 0;
    for (std::size_t j = ci + 1; j < classes.size(); ++j) rest += classes[j].size();
    const auto& cls = classes[ci];
    const std::size_t hi = std::min(left, cls.size());
    for (std::size_t take = 0; take <= hi; ++take) {
      if (left - take > rest) continue;
      for (std::size_t i = 0; i < take; ++i) chosen.push_back(cls[i]);
      choose(g, v, classes, ci + 1, left - take, chosen, out);
      chosen.resize(chosen.size() - take);
    }
  }

  bool admissible(const Graph& g) const {
    Mask open = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (g.degree(u) < k_) open |= bit(u);
    }
    // every open vertex can still reach degree k
    for (Mask o = open; o != 0; o &= o - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(o));
      const Mask room = open & ~bit(u) & ~row_mask(g, u);
      if (static_cast<std::size_t>(std::popcount(room)) < k_ - g.degree(u)) return false;
    }
    if (!connected_) return true;
    // a component without open vertices is final
    Mask seen = 0;
    const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    while (seen != all) {
      Mask comp = bit(static_cast<std::size_t>(std::countr_zero(~seen & all)));
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= row_mask(g, static_cast<std::size_t>(std::countr_zero(f)));
        frontier = next & ~comp;
        comp |= next;
      }
      if (comp != all && (comp & open) == 0) return false;
      seen |= comp;
    }
    return true;
  }

  std::size_t n_, k_;
  bool connected_;
  std::optional<std::uint64_t> seed_;
};

// Canonical graph6 of every k-regular graph on n vertices (connected ones
// when asked), sorted.
std::vector<std::string> complete_all(std::size_t n, std::size_t k, bool connected, const EnumConfig& cfg) {
  const Completer completer(n, k, connected, cfg.seed);
  // pending partial graphs keyed by edge count
  std::map<std::size_t, std::set<std::string>> pending;
  pending[0].insert(graph6_encode(Graph(n)));
  const std::size_t final_edges = n * k / 2;
  const unsigned threads = std::max(1U, cfg.threads);

  while (pending.begin()->first < final_edges) {
    auto node = pending.extract(pending.begin());
    const std::vector<std::string> layer(node.mapped().begin(), node.mapped().end());
    std::vector<std::vector<std::string>> produced(threads);
    auto work = [&](unsigned t) {
      for (std::size_t i = t; i < layer.size(); i += threads) completer.children(graph6_decode(layer[i]), layer[i], produced[t]);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (auto& chunk : produced) {
      for (auto& key : chunk) {
        const std::size_t e = graph6_decode(key).edge_count();
        auto& bucket = pending[e];
        bucket.insert(std::move(key));
        if (bucket.size() > cfg.max_layer) {
          throw Error(Errc::SearchSpaceTooLarge, "enumerate_regular: more than " + std::to_string(cfg.max_layer) +
                                                     " partial graphs with " + std::to_string(e) + " edges");
        }
      }
    }
    if (pending.empty()) return {};
  }
  const auto& done = pending.begin()->second;
  return {done.begin(), done.end()};
}

bool passes(const Graph& g, const EnumFilters& f) {
  if (f.empty()) return true;
  const Spectrum s = spectrum(g);
  if (f.distinct_eigenvalues && s.distinct() != *f.distinct_eigenvalues) return false;
  if (f.taxonomy) {
    if (classify_four(s).kind != *f.taxonomy) return false;
  }
  if (f.second_least_at_least) {
    if (s.order() < 2) return false;
    if (s.nth_smallest(1) < AlgebraicNumber(*f.second_least_at_least)) return false;
  }
  return true;
}

}  // namespace

void enumerate_regular(const EnumSpec& spec, const EnumConfig& config, const std::function<void(const Graph&)>& sink) {
  const std::size_t n = spec.n, k = spec.k;
  if (n == 0) throw Error(Errc::InvalidArgument, "enumerate_regular: n must be positive");
  if (k > n - 1) throw Error(Errc::InvalidArgument, "enumerate_regular: k = " + std::to_string(k) + " exceeds n - 1");
  if ((n * k) % 2 != 0) throw Error(Errc::InvalidArgument, "enumerate_regular: nk must be even");
  if (n > config.max_order || n > kWordLimit) {
    throw Error(Errc::SearchSpaceTooLarge, "enumerate_regular: n = " + std::to_string(n) + " exceeds the cap " +
                                               std::to_string(std::min(config.max_order, kWordLimit)));
  }

  std::vector<Graph> found;
  if (2 * k > n - 1) {
    for (const auto& key : complete_all(n, n - 1 - k, false, config)) {
      Graph g = complement(graph6_decode(key));
      if (spec.connected_only && !is_connected(g)) continue;
      found.push_back(canonical_labeling(g).canonical);
    }
  } else {
    for (const auto& key : complete_all(n, k, spec.connected_only, config)) {
      Graph g = graph6_decode(key);
      if (spec.connected_only && !is_connected(g)) continue;
      found.push_back(std::move(g));
    }
  }
  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < found.size(); ++i) order.emplace_back(graph6_encode(found[i]), i);
  std::sort(order.begin(), order.end());
  for (const auto& [text, i] : order) {
    if (passes(found[i], spec.filters)) sink(found[i]);
  }
}

std::vector<Graph> enumerate_regular(const EnumSpec& spec, const EnumConfig& config) {
  std::vector<Graph> out;
  enumerate_regular(spec, config, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> cospectral_mates(const Spectrum& target, const EnumSpec& space, const EnumConfig& config) {
  std::vector<Graph> out;
  if (target.order() != space.n) return out;
  const auto poly = target.characteristic_polynomial();
  enumerate_regular(space, config, [&](const Graph& g) {
    const bool same = poly ? char_poly(g.adjacency_matrix()) == *poly : spectrum(g) == target;
    if (same) out.push_back(g);
  });
  return out;
}

}  // namespace regspec
