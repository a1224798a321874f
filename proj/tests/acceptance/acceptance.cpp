// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "regspec/enumeration/enumerate.hpp"
#include "regspec/feasibility/scans.hpp"
#include "regspec/graph/canonical.hpp"
#include "regspec/graph/families.hpp"
#include "regspec/graph/graph6.hpp"
#include "regspec/spectral/spectrum.hpp"
#include "regspec/spectral/structure.hpp"
#include "support/oracles.hpp"

using namespace regspec;

namespace {

using Clock = std::chrono::steady_clock;

// Every graph a criterion looks at, keyed by its labelled graph6.
std::map<std::string, Graph> touched;

void touch(const Graph& g) { touched.emplace(graph6_encode(g), g); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s  %s(%.2f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.note.str().c_str(), secs);
  std::fflush(stdout);
}

AlgebraicNumber num(long v) { return AlgebraicNumber(Integer(v)); }

Spectrum multiset(std::initializer_list<std::pair<long, long>> values) {
  std::vector<SpectrumEntry> es;
  for (const auto& [v, m] : values) es.push_back({num(v), static_cast<std::size_t>(m)});
  return Spectrum(es);
}

Graph family(FamilyTag tag, std::vector<long> params) { return construct({tag, std::move(params), {}}); }

std::string name(FamilyTag tag, long s, long t) {
  return FamilyDescriptor{tag, {s, t}, {}}.to_string();
}

bool second_least_at_least_minus_one(const Spectrum& s) { return !(s.nth_smallest(1) < num(-1)); }

}  // namespace

int main() {
  criterion(1, "closed-form spectra of KssExpand and CrownExpand", 10.0, [](Outcome& o) {
    std::size_t checked = 0;
    for (long s = 2; s <= 6; ++s)
      for (long t = 2; t <= 4; ++t) {
        const Graph g = family(FamilyTag::KssExpand, {s, t});
        touch(g);
        const Spectrum want = multiset({{s * t + t - 1, 1}, {-s * t + t - 1, 1}, {t - 1, 2 * s - 2}, {-1, 2 * s * (t - 1)}});
        o.require(spectrum(g) == want, name(FamilyTag::KssExpand, s, t));
        ++checked;
      }
    for (long s = 3; s <= 6; ++s)
      for (long t = 1; t <= 4; ++t) {
        const Graph g = family(FamilyTag::CrownExpand, {s, t});
        touch(g);
        const Spectrum want = multiset({{s * t - 1, 1}, {-s * t + 2 * t - 1, 1}, {2 * t - 1, s - 1}, {-1, 2 * s * t - s - 1}});
        o.require(spectrum(g) == want, name(FamilyTag::CrownExpand, s, t));
        ++checked;
      }
    o.note << checked << " graphs exact; ";
  });

  criterion(2, "complement of CrownExpand spectra", 10.0, [](Outcome& o) {
    std::size_t checked = 0;
    for (long s = 3; s <= 6; ++s)
      for (long t = 1; t <= 4; ++t) {
        const Graph g = complement(family(FamilyTag::CrownExpand, {s, t}));
        touch(g);
        const Spectrum want = multiset({{s * t, 1}, {s * t - 2 * t, 1}, {-2 * t, s - 1}, {0, 2 * s * t - s - 1}});
        o.require(spectrum(g) == want, "complement of " + name(FamilyTag::CrownExpand, s, t));
        ++checked;
      }
    o.note << checked << " graphs exact; ";
  });

  criterion(3, "clique-expansion spectrum map", 0, [](Outcome& o) {
    std::vector<Graph> base{family(FamilyTag::CompleteK, {3}), family(FamilyTag::CycleC, {5})};
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<std::size_t> order(3, 8);
    while (base.size() < 22) {
      const Graph g = oracle::random_graph(rng, order(rng), 0.45);
      if (is_connected(g)) base.push_back(g);
    }
    std::size_t checked = 0;
    for (const auto& g : base) {
      touch(g);
      const Spectrum sg = spectrum(g);
      for (std::size_t m = 1; m <= 4; ++m) {
        const Graph e = clique_expand(g, m);
        touch(e);
        o.require(spectrum(e) == clique_expand_spectrum(sg, m), graph6_encode(g) + " m=" + std::to_string(m));
        ++checked;
      }
    }
    o.note << base.size() << " base graphs, " << checked << " expansions exact; ";
  });

  // Shared by criteria 4, 5, 7, 8 and 12.
  const std::vector<CorpusEntry> corpus = regular_corpus(10);
  for (const auto& e : corpus) touch(e.graph);

  criterion(4, "no four-eigenvalue graph with three simple eigenvalues, n <= 10", 0, [&](Outcome& o) {
    const VerificationReport r = verify_theorem(TheoremId::Thm31, 10);
    o.require(r.counterexamples.empty(), "verify_theorem reported " + std::to_string(r.counterexamples.size()));
    std::size_t four = 0;
    for (const auto& e : corpus) {
      if (e.spectrum.distinct() != 4) continue;
      ++four;
      o.require(e.spectrum.simple_count() < 3, graph6_encode(e.graph));
    }
    o.require(four == r.four_eigenvalue_graphs, "four-eigenvalue counts disagree");
    o.note << corpus.size() << " graphs, " << four << " with four eigenvalues, 0 counterexamples; ";
  });

  criterion(5, "second least >= -1 four-eigenvalue graphs on n <= 10", 0, [&](Outcome& o) {
    std::set<std::string> want;
    for (const auto& [tag, s, t] : std::vector<std::tuple<FamilyTag, long, long>>{
             {FamilyTag::CrownExpand, 3, 1}, {FamilyTag::KssExpand, 2, 2}, {FamilyTag::CrownExpand, 4, 1},
             {FamilyTag::CrownExpand, 5, 1}}) {
      want.insert(canonical_form(family(tag, {s, t})));
    }
    std::set<std::string> scanned;
    for (const auto& e : corpus) {
      if (e.spectrum.distinct() == 4 && second_least_at_least_minus_one(e.spectrum)) scanned.insert(canonical_form(e.graph));
    }
    o.require(scanned == want, "corpus scan found " + std::to_string(scanned.size()) + " classes");
    for (TheoremId id : {TheoremId::Thm36, TheoremId::Thm39}) {
      const VerificationReport r = verify_theorem(id, 10);
      std::set<std::string> members;
      for (const auto& m : r.members) members.insert(canonical_form(graph6_decode(m.graph6)));
      o.require(members == want, std::string(theorem_name(id)) + " member set differs");
      o.require(r.counterexamples.empty(), std::string(theorem_name(id)) + " has counterexamples");
    }
    o.note << "exactly CrownExpand(3,1), KssExpand(2,2), CrownExpand(4,1), CrownExpand(5,1); ";
  });

  criterion(6, "spectral uniqueness of KssExpand(2,2) and Crown(4)", 0, [](Outcome& o) {
    const std::vector<std::pair<Graph, EnumSpec>> cases{
        {family(FamilyTag::KssExpand, {2, 2}), EnumSpec{8, 5, true, {}}},
        {family(FamilyTag::Crown, {4}), EnumSpec{8, 3, true, {}}},
    };
    for (const auto& [g, space] : cases) {
      touch(g);
      const auto mates = cospectral_mates(spectrum(g), space);
      for (const auto& m : mates) touch(m);
      o.require(mates.size() == 1, graph6_encode(g) + ": " + std::to_string(mates.size()) + " classes");
      if (mates.size() == 1) o.require(oracle::backtrack_isomorphic(mates[0], g), graph6_encode(g) + ": wrong class");
    }
    o.note << "one class each; ";
  });

  criterion(7, "four-eigenvalue graphs are walk-regular, n <= 10", 0, [&](Outcome& o) {
    const VerificationReport r = verify_theorem(TheoremId::Lem22, 10);
    o.require(r.counterexamples.empty(), "verify_theorem reported counterexamples");
    std::size_t four = 0;
    for (const auto& e : corpus) {
      if (e.spectrum.distinct() != 4) continue;
      ++four;
      o.require(is_walk_regular(e.graph), graph6_encode(e.graph));
      o.require(oracle::walk_regular_by_powers(e.graph.adjacency_matrix()), graph6_encode(e.graph) + " (powers)");
    }
    o.note << four << " graphs walk-regular; ";
  });

  criterion(8, "halves partition and divisibility from simple integral eigenvalues", 0, [&](Outcome& o) {
    std::size_t checked = 0, excluded = 0, divisibility = 0;
    for (const auto& e : corpus) {
      const auto& es = e.spectrum.entries();
      const bool walk_regular = is_walk_regular(e.graph);
      for (std::size_t i = 1; i < es.size(); ++i) {
        if (es[i].multiplicity != 1 || !es[i].value.is_integer()) continue;
        if (!walk_regular) {
          ++excluded;
          continue;
        }
        const Integer lambda = es[i].value.value();
        const Integer k(static_cast<long>(e.k));
        const std::string where = graph6_encode(e.graph) + " lambda=" + to_string(lambda);
        const RegularPartition p = regular_halves_partition(e.graph, lambda);
        o.require(Integer(static_cast<long>(p.internal)) * 2 == k + lambda, where + " internal degree");
        o.require(Integer(static_cast<long>(p.external)) * 2 == k - lambda, where + " external degree");
        o.require(p.half_plus.size() == p.half_minus.size() && p.half_plus.size() * 2 == e.n, where + " halves");
        for (std::size_t v = 0; v < e.n; ++v) {
          std::size_t same = 0;
          const bool plus = std::find(p.half_plus.begin(), p.half_plus.end(), v) != p.half_plus.end();
          for (std::size_t u : e.graph.neighbors(v)) {
            const bool uplus = std::find(p.half_plus.begin(), p.half_plus.end(), u) != p.half_plus.end();
            same += uplus == plus ? 1 : 0;
          }
          o.require(same == p.internal, where + " vertex " + std::to_string(v));
        }
        if (e.spectrum.all_integral()) {
          o.require(divisibility_check(e.spectrum, lambda).passed(), where + " divisibility");
          ++divisibility;
        }
        ++checked;
      }
    }
    o.require(checked > 0, "nothing checked");
    o.note << checked << " eigenvalues on walk-regular graphs (" << divisibility << " with divisibility), " << excluded
           << " on non-walk-regular graphs excluded; ";
  });

  criterion(9, "non-integral eigenvalue scan, k <= 200", 1.0, [](Outcome& o) {
    const auto entries = scan_noninteger(2, 200);
    o.require(entries.size() == 199, "wrong entry count");
    for (const auto& e : entries) {
      const std::string where = "k=" + std::to_string(e.k);
      o.require(!e.feasible, where + " feasible");
      o.require(!e.certificate.empty(), where + " no certificate");
      if (e.k == 2) continue;
      if (e.k % 2 == 1) {
        o.require(e.certificate.find("not integral") != std::string::npos, where + " certificate");
        o.require(!e.same_adjacent.is_integer(), where + " same-half count integral");
      } else {
        o.require(e.certificate.find("not integral") != std::string::npos, where + " certificate");
        o.require(e.partition_degree.get_den() != 1, where + " partition degree integral");
      }
    }
    o.note << "199 values of k infeasible with parity certificates; ";
  });

  criterion(10, "integral four-eigenvalue scan, n <= 60", 60.0, [](Outcome& o) {
    const IntegerScanReport r = scan_integer(60, 1);
    o.require(r.feasible_count == 0, std::to_string(r.feasible_count) + " feasible triples");
    o.require(!r.entries.empty(), "no triples scanned");
    o.note << r.entries.size() << " triples, 0 feasible; ";
  });

  criterion(11, "connected cubic census", 0, [](Outcome& o) {
    const std::map<std::size_t, std::size_t> want{{4, 1}, {6, 2}, {8, 5}, {10, 19}};
    for (const auto& [n, count] : want) {
      const auto graphs = enumerate_regular({n, 3, true, {}});
      for (const auto& g : graphs) touch(g);
      o.require(graphs.size() == count, "n=" + std::to_string(n) + ": " + std::to_string(graphs.size()));
      if (n <= 8) {
        const auto naive = oracle::naive_regular_classes(n, 3, true);
        o.require(naive.size() == count, "naive n=" + std::to_string(n));
        for (const auto& g : naive) {
          std::size_t hits = 0;
          for (const auto& h : graphs) hits += oracle::backtrack_isomorphic(g, h) ? 1 : 0;
          o.require(hits == 1, "naive class not matched exactly once at n=" + std::to_string(n));
        }
      }
    }
    // n = 10: the disconnected cubic graphs are K_4 plus one of the two on 6.
    const auto all10 = enumerate_regular({10, 3, false, {}});
    o.require(all10.size() == 19 + 2, "all cubic n=10: " + std::to_string(all10.size()));
    std::set<std::string> seen;
    for (const auto& g : all10) {
      o.require(regular_degree(g) == 3, "n=10 not cubic");
      o.require(seen.insert(canonical_form(g)).second, "n=10 duplicate class");
    }
    EnumConfig threaded;
    threaded.threads = 4;
    threaded.seed = 99;
    o.require(enumerate_regular({10, 3, true, {}}, threaded) == enumerate_regular({10, 3, true, {}}),
              "n=10 depends on threads or seed");
    o.note << "1, 2, 5, 19; naive oracle agrees for n <= 8; ";
  });

  criterion(12, "property suites on every touched graph", 0, [](Outcome& o) {
    std::size_t regular = 0;
    for (const auto& [g6, g] : touched) {
      o.require(graph6_decode(g6) == g && graph6_encode(graph6_decode(g6)) == g6, g6 + " graph6 round-trip");
      const Spectrum s = spectrum(g);
      const IntMatrix a = g.adjacency_matrix();
      IntMatrix p = IntMatrix::identity(g.order());
      for (unsigned r = 0; r <= 4; ++r) {
        const auto ps = s.power_sum(r);
        o.require(ps && *ps == p.trace(), g6 + " trace identity r=" + std::to_string(r));
        p = p * a;
      }
      o.require(annihilation_check(g), g6 + " annihilation");
      if (const auto k = regular_degree(g)) {
        o.require(spectrum(complement(g)) == complement_spectrum(s, Integer(static_cast<long>(*k))), g6 + " complement");
        ++regular;
      }
    }
    o.note << touched.size() << " graphs (" << regular << " regular); ";
  });

  std::printf("%s: %d of 12 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
