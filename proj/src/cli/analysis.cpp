#include "regspec/cli/analysis.hpp"

#include <sstream>

#include "regspec/error.hpp"
#include "regspec/graph/graph6.hpp"

namespace regspec {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  r.graph6 = graph6_encode(g);
  r.order = g.order();
  const BasicPredicates bp = basic_predicates(g);
  r.degree = bp.degree;
  r.connected = bp.is_connected;
  r.bipartite = bp.is_bipartite;
  r.spectrum = spectrum(g);
  r.walk_regular = is_walk_regular(g);
  if (r.order >= 2) r.second_least = r.spectrum.nth_smallest(1);
  r.membership = class_membership(g, r.spectrum);
  if (!r.connected || !r.degree) return r;

  r.taxonomy = classify_four(r.spectrum);
  if (r.order < 2) return r;
  const auto& es = r.spectrum.entries();
  for (std::size_t i = 1; i < es.size(); ++i) {
    if (es[i].multiplicity != 1 || !es[i].value.is_integer()) continue;
    PartitionFinding f;
    f.lambda = es[i].value.value();
    try {
      f.partition = regular_halves_partition(g, f.lambda);
    } catch (const Error& e) {
      f.error = std::string(to_string(e.code()));
    }
    if (r.spectrum.all_integral()) f.divisibility = divisibility_check(r.spectrum, f.lambda);
    r.partitions.push_back(std::move(f));
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const char* key, const std::string& value) {
    out << key << std::string(14 - std::string(key).size(), ' ') << value << '\n';
  };
  row("graph6", r.graph6);
  row("order", std::to_string(r.order));
  row("degree", r.degree ? std::to_string(*r.degree) : "not regular");
  row("connected", yes_no(r.connected));
  row("bipartite", yes_no(r.bipartite));
  row("spectrum", r.spectrum.to_string());
  row("distinct", std::to_string(r.spectrum.distinct()));
  if (r.taxonomy) {
    row("taxonomy", std::string(taxonomy_code(r.taxonomy->kind)) + " (" + std::string(taxonomy_name(r.taxonomy->kind)) + ")");
  } else {
    row("taxonomy", "n/a (not connected and regular)");
  }
  row("walk-regular", yes_no(r.walk_regular));
  if (r.second_least) row("second least", r.second_least->to_string());
  for (const auto& p : r.partitions) {
    std::string v = "lambda " + to_string(p.lambda) + ": ";
    if (p.partition) {
      v += "halves degrees (" + std::to_string(p.partition->internal) + ", " + std::to_string(p.partition->external) + ")";
    } else {
      v += "no halves partition (" + *p.error + ")";
    }
    if (p.divisibility) {
      v += ", P = " + to_string(p.divisibility->p) + ", Q = " + to_string(p.divisibility->q) + ", n | P+Q " +
           yes_no(p.divisibility->sum_ok) + ", n | P-Q " + yes_no(p.divisibility->diff_ok);
    }
    row("partition", v);
  }
  const auto& m = r.membership;
  row("membership", std::string("G(4,2) ") + yes_no(m.g42) + ", G(4,2,-1) " + yes_no(m.g42_minus1) + ", G(4,2,0) " +
                        yes_no(m.g42_zero) + ", G(4,>=-1) " + yes_no(m.g4_ge_minus1));
  row("family", m.recognized ? m.recognized->to_string() : "none");
  return out.str();
}

}  // namespace regspec
