#include <doctest.h>

#include <random>

#include "regspec/algebra/charpoly.hpp"
#include "regspec/error.hpp"
#include "regspec/graph/canonical.hpp"
#include "regspec/graph/families.hpp"
#include "regspec/graph/graph.hpp"
#include "regspec/graph/graph6.hpp"
#include "support/oracles.hpp"

using namespace regspec;

namespace {

FamilyDescriptor fam(FamilyTag tag, std::vector<long> params) { return {tag, std::move(params), {}}; }

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::vector<FamilyDescriptor> sample_families() {
  std::vector<FamilyDescriptor> out;
  for (long n = 1; n <= 6; ++n) out.push_back(fam(FamilyTag::CompleteK, {n}));
  for (long n = 3; n <= 8; ++n) out.push_back(fam(FamilyTag::CycleC, {n}));
  out.push_back(fam(FamilyTag::CompleteBipartite, {3, 4}));
  out.push_back(fam(FamilyTag::CompleteMultipartite, {1, 2, 3}));
  for (long s = 2; s <= 5; ++s) out.push_back(fam(FamilyTag::Crown, {s}));
  for (long s = 1; s <= 3; ++s)
    for (long t = 1; t <= 3; ++t) out.push_back(fam(FamilyTag::KssExpand, {s, t}));
  for (long s = 3; s <= 4; ++s)
    for (long t = 1; t <= 2; ++t) {
      out.push_back(fam(FamilyTag::CrownExpand, {s, t}));
      out.push_back(fam(FamilyTag::ComplementCrownExpand, {s, t}));
    }
  out.push_back(fam(FamilyTag::AGraph, {1, 2, 3}));
  out.push_back(fam(FamilyTag::BGraph, {1, 2, 2, 1}));
  return out;
}

}  // namespace

TEST_CASE("construct examples") {
  const Graph k4 = construct(fam(FamilyTag::CompleteK, {4}));
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph crown3 = construct(fam(FamilyTag::Crown, {3}));
  CHECK(crown3.order() == 6);
  CHECK(crown3.edge_count() == 6);
  const Graph c6 = construct(fam(FamilyTag::CycleC, {6}));
  CHECK(oracle::brute_force_isomorphic(crown3, c6));
  CHECK(are_isomorphic(crown3, c6));

  const Graph a = construct(fam(FamilyTag::AGraph, {1, 2, 3}));
  CHECK(a.order() == 7);
  CHECK(a.degree(6) == 3);

  const Graph b = construct(fam(FamilyTag::BGraph, {1, 2, 3, 4}));
  CHECK(b.order() == 12);
  CHECK(b.degree(10) == 3);  // y joined to N
  CHECK(b.degree(11) == 4);  // z joined to P
}

TEST_CASE("construct rejects out-of-range parameters") {
  const FamilyDescriptor bad[] = {fam(FamilyTag::CompleteK, {0}),       fam(FamilyTag::CycleC, {2}),
                                  fam(FamilyTag::Crown, {1}),           fam(FamilyTag::CrownExpand, {2, 1}),
                                  fam(FamilyTag::KssExpand, {1, 0}),    fam(FamilyTag::AGraph, {1, 0, 1}),
                                  fam(FamilyTag::BGraph, {1, 1, 1}),    fam(FamilyTag::CompleteMultipartite, {}),
                                  fam(FamilyTag::IncidenceGraph, {7, 3, 1})};
  for (const auto& d : bad) {
    CAPTURE(d.to_string());
    try {
      construct(d);
      FAIL("expected ParameterOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParameterOutOfRange);
    }
  }
}

TEST_CASE("crown is (s-1)-regular bipartite") {
  for (long s = 2; s <= 9; ++s) {
    const auto p = basic_predicates(construct(fam(FamilyTag::Crown, {s})));
    REQUIRE(p.degree.has_value());
    CHECK(*p.degree == static_cast<std::size_t>(s - 1));
    CHECK(p.is_bipartite);
    CHECK(p.is_connected == (s >= 3));
  }
}

TEST_CASE("designs and incidence graphs") {
  const auto fano = cyclic_design(7, {0, 1, 3});
  const DesignParams p = design_params(fano);
  CHECK(p == DesignParams{7, 7, 3, 3, 1});
  CHECK(p.is_symmetric());
  const Graph heawood = incidence_graph(fano);
  CHECK(heawood.order() == 14);
  CHECK(regular_degree(heawood) == std::optional<std::size_t>(3));
  CHECK(basic_predicates(heawood).is_bipartite);
  CHECK_THROWS_AS(design_params(cyclic_design(7, {0, 1, 2})), Error);
  FamilyDescriptor d{FamilyTag::IncidenceGraph, {7, 3, 1}, fano};
  CHECK(construct(d) == heawood);
}

TEST_CASE("clique_expand examples") {
  const Graph k2 = construct(fam(FamilyTag::CompleteK, {2}));
  CHECK(clique_expand(k2, 2) == construct(fam(FamilyTag::CompleteK, {4})));
  const Graph kss = clique_expand(construct(fam(FamilyTag::CompleteBipartite, {2, 2})), 2);
  CHECK(kss.order() == 8);
  CHECK(regular_degree(kss) == std::optional<std::size_t>(5));
  const Graph c5 = construct(fam(FamilyTag::CycleC, {5}));
  CHECK(clique_expand(c5, 1) == c5);
  CHECK_THROWS_AS(clique_expand(c5, 0), Error);
}

TEST_CASE("clique_expand degrees on every family") {
  for (const auto& d : sample_families()) {
    const Graph g = construct(d);
    for (std::size_t m = 1; m <= 4; ++m) {
      CAPTURE(d.to_string());
      CAPTURE(m);
      const Graph h = clique_expand(g, m);
      REQUIRE(h.order() == g.order() * m);
      for (std::size_t v = 0; v < g.order(); ++v)
        for (std::size_t i = 0; i < m; ++i) CHECK(h.degree(v * m + i) == m * g.degree(v) + m - 1);
    }
  }
}

TEST_CASE("complement") {
  const Graph k5 = construct(fam(FamilyTag::CompleteK, {5}));
  CHECK(complement(k5).edge_count() == 0);
  const Graph c5 = construct(fam(FamilyTag::CycleC, {5}));
  CHECK(are_isomorphic(complement(c5), c5));
  const Graph cc = complement(clique_expand(construct(fam(FamilyTag::Crown, {3})), 1));
  CHECK(regular_degree(cc) == std::optional<std::size_t>(3));
  for (const auto& d : sample_families()) {
    const Graph g = construct(d);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("basic predicates") {
  const auto crown = basic_predicates(construct(fam(FamilyTag::Crown, {3})));
  CHECK(crown.is_connected);
  CHECK(crown.degree == std::optional<std::size_t>(2));
  CHECK(crown.is_bipartite);
  const auto k4 = basic_predicates(construct(fam(FamilyTag::CompleteK, {4})));
  CHECK(k4.is_connected);
  CHECK(k4.degree == std::optional<std::size_t>(3));
  CHECK_FALSE(k4.is_bipartite);
  const Graph c4 = construct(fam(FamilyTag::CycleC, {4}));
  CHECK_FALSE(basic_predicates(disjoint_union(c4, c4)).is_connected);
  CHECK_FALSE(basic_predicates(path(3)).is_regular);
}

TEST_CASE("graph6 examples") {
  CHECK(graph6_encode(construct(fam(FamilyTag::CompleteK, {4}))) == "C~");
  CHECK(graph6_encode(construct(fam(FamilyTag::CompleteK, {2}))) == "A_");
  CHECK(graph6_encode(construct(fam(FamilyTag::CycleC, {4}))) == "Cl");
  CHECK(graph6_decode("C~") == construct(fam(FamilyTag::CompleteK, {4})));
  CHECK(graph6_decode("Cl\n") == construct(fam(FamilyTag::CycleC, {4})));
  CHECK(graph6_decode(">>graph6<<A_") == construct(fam(FamilyTag::CompleteK, {2})));
}

TEST_CASE("graph6 agrees with the reference encoder and round-trips") {
  std::mt19937_64 rng(8);
  for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 12u, 30u, 62u, 63u, 64u, 100u}) {
    for (int trial = 0; trial < 4; ++trial) {
      const Graph g = oracle::random_graph(rng, n, 0.3 + 0.1 * trial);
      const std::string text = graph6_encode(g);
      CHECK(text == oracle::reference_graph6(g));
      CHECK(graph6_decode(text) == g);
    }
  }
}

TEST_CASE("graph6 rejects malformed input") {
  for (const char* bad : {"", "C", "C~~", "C\x7f", "B}", "~??", "A `"}) {
    CAPTURE(bad);
    try {
      graph6_decode(bad);
      FAIL("expected MalformedGraph6");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MalformedGraph6);
    }
  }
}

TEST_CASE("canonical form examples") {
  std::mt19937_64 rng(1);
  const Graph c4 = construct(fam(FamilyTag::CycleC, {4}));
  for (int i = 0; i < 10; ++i) CHECK(are_isomorphic(c4, oracle::random_relabel(rng, c4)));
  CHECK_FALSE(are_isomorphic(c4, path(4)));

  // K_{1,4} and C_4 + K_1 share a characteristic polynomial but differ.
  const Graph star = construct(fam(FamilyTag::CompleteBipartite, {1, 4}));
  const Graph other = disjoint_union(c4, Graph(1));
  CHECK(char_poly(star.adjacency_matrix()) == char_poly(other.adjacency_matrix()));
  CHECK(canonical_form(star) != canonical_form(other));
  CHECK_FALSE(are_isomorphic(star, other));
}

TEST_CASE("are_isomorphic agrees with brute force on small random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = trial % 3 == 0 ? oracle::random_relabel(rng, a) : oracle::random_graph(rng, n, 0.5);
    CHECK(are_isomorphic(a, b) == oracle::brute_force_isomorphic(a, b));
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(77);
  std::vector<Graph> corpus;
  for (const auto& d : sample_families()) corpus.push_back(construct(d));
  corpus.push_back(construct(fam(FamilyTag::KssExpand, {4, 3})));
  corpus.push_back(construct(fam(FamilyTag::CrownExpand, {6, 4})));
  corpus.push_back(incidence_graph(cyclic_design(13, {0, 1, 3, 9})));
  for (int i = 0; i < 20; ++i) corpus.push_back(oracle::random_graph(rng, 6 + i % 14, 0.4));
  for (const auto& g : corpus) {
    const auto cl = canonical_labeling(g);
    CHECK(g.relabeled(cl.label) == cl.canonical);
    for (const auto& gamma : cl.automorphisms) CHECK(g.relabeled(gamma) == g);
    for (int r = 0; r < 3; ++r) CHECK(canonical_labeling(oracle::random_relabel(rng, g)).canonical == cl.canonical);
  }
}

TEST_CASE("isomorphism is an equivalence relation on a corpus") {
  std::mt19937_64 rng(5);
  std::vector<Graph> corpus;
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 6, 0.5);
    corpus.push_back(g);
    corpus.push_back(oracle::random_relabel(rng, g));
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(are_isomorphic(corpus[i], corpus[i]));
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const bool ij = are_isomorphic(corpus[i], corpus[j]);
      CHECK(ij == are_isomorphic(corpus[j], corpus[i]));
      if (!ij) continue;
      for (std::size_t k = 0; k < corpus.size(); ++k) {
        if (are_isomorphic(corpus[j], corpus[k])) CHECK(are_isomorphic(corpus[i], corpus[k]));
      }
    }
  }
}

TEST_CASE("coloured canonical labeling agrees with colour-preserving brute force") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph a = oracle::random_graph(rng, n, 0.5);
    std::vector<std::uint32_t> ca(n);
    for (auto& c : ca) c = static_cast<std::uint32_t>(rng() % 3);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // b = a relabeled by perm, colours carried along, sometimes one colour changed
    const Graph b = a.relabeled(perm);
    std::vector<std::uint32_t> cb(n);
    for (std::size_t v = 0; v < n; ++v) cb[perm[v]] = ca[v];
    if (trial % 2 == 1) cb[rng() % n] = static_cast<std::uint32_t>(rng() % 3);
    const auto la = canonical_labeling(a, ca), lb = canonical_labeling(b, cb);
    for (std::size_t v = 0; v < n; ++v) {
      // colour classes occupy fixed position ranges
      for (std::size_t w = 0; w < n; ++w) {
        if (ca[v] < ca[w]) CHECK(la.label[v] < la.label[w]);
      }
    }
    for (const auto& gamma : la.automorphisms) {
      CHECK(a.relabeled(gamma) == a);
      for (std::size_t v = 0; v < n; ++v) CHECK(ca[gamma[v]] == ca[v]);
    }
    auto sorted = [](std::vector<std::uint32_t> c) {
      std::sort(c.begin(), c.end());
      return c;
    };
    const bool same = la.canonical == lb.canonical && sorted(ca) == sorted(cb);
    CHECK(same == oracle::backtrack_isomorphic(a, ca, b, cb));
  }
}

TEST_CASE("coloured canonical labeling rejects a wrong colour count") {
  CHECK_THROWS_AS(canonical_labeling(Graph(3), std::vector<std::uint32_t>{0, 1}), Error);
}
