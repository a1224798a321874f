#include "regspec/cli/json.hpp"

#include <cstdio>

#include "regspec/graph/graph6.hpp"

namespace regspec {

namespace {

Json str(const Integer& z) { return to_string(z); }
Json str(const Rational& q) { return to_string(q); }

template <class T>
Json optional(const std::optional<T>& v) {
  return v ? Json(str(*v)) : Json(nullptr);
}

Json vertices(const std::vector<std::size_t>& vs) { return Json(vs); }

}  // namespace

std::string decimal6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

Json to_json(const AlgebraicNumber& x) {
  Json j;
  switch (x.kind()) {
    case AlgebraicNumber::Kind::Integer:
      j["kind"] = "integer";
      j["value"] = str(x.value());
      break;
    case AlgebraicNumber::Kind::Quadratic:
      j["kind"] = "quadratic";
      j["a"] = str(x.a());
      j["b"] = str(x.b());
      j["sign"] = x.sign();
      break;
    case AlgebraicNumber::Kind::Isolated: {
      j["kind"] = "isolated";
      Json coeffs = Json::array();
      for (const auto& c : x.poly().coefficients()) coeffs.push_back(str(c));
      j["polynomial"] = coeffs;
      j["interval"] = {str(x.interval().lo), str(x.interval().hi)};
      break;
    }
  }
  j["text"] = x.to_string();
  j["decimal"] = decimal6(x.approx());
  return j;
}

Json to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries()) {
    Json j = to_json(e.value);
    j["multiplicity"] = e.multiplicity;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json to_json(const FamilyDescriptor& d) {
  return {{"tag", std::string(family_name(d.tag))}, {"params", d.params}, {"text", d.to_string()}};
}

Json to_json(const FeasibilityReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  Json j = {{"feasible", r.feasible}, {"conditions", conds}};
  j["first_failure"] = r.first_failure ? Json(r.conditions[*r.first_failure].name) : Json(nullptr);
  j["beta"] = optional(r.beta);
  j["m"] = optional(r.m);
  j["c"] = optional(r.c);
  return j;
}

Json analysis_record(const AnalysisReport& r) {
  Json j;
  j["record"] = "analysis";
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["connected"] = r.connected;
  j["bipartite"] = r.bipartite;
  j["spectrum"] = to_json(r.spectrum);
  j["spectrum_text"] = r.spectrum.to_string();
  j["distinct"] = r.spectrum.distinct();
  if (r.taxonomy) {
    Json t = {{"code", std::string(taxonomy_code(r.taxonomy->kind))}, {"name", std::string(taxonomy_name(r.taxonomy->kind))}};
    t["m"] = r.taxonomy->m ? Json(*r.taxonomy->m) : Json(nullptr);
    t["k"] = r.taxonomy->k ? Json(*r.taxonomy->k) : Json(nullptr);
    j["taxonomy"] = t;
  } else {
    j["taxonomy"] = nullptr;
  }
  j["walk_regular"] = r.walk_regular;
  j["second_least"] = r.second_least ? to_json(*r.second_least) : Json(nullptr);
  Json parts = Json::array();
  for (const auto& p : r.partitions) {
    Json pj;
    pj["lambda"] = str(p.lambda);
    pj["ok"] = p.partition.has_value();
    if (p.partition) {
      pj["degrees"] = {p.partition->internal, p.partition->external};
      pj["half_plus"] = vertices(p.partition->half_plus);
      pj["half_minus"] = vertices(p.partition->half_minus);
    } else {
      pj["degrees"] = nullptr;
      pj["half_plus"] = nullptr;
      pj["half_minus"] = nullptr;
    }
    pj["error"] = p.error ? Json(*p.error) : Json(nullptr);
    if (p.divisibility) {
      pj["divisibility"] = {{"p", str(p.divisibility->p)},
                            {"q", str(p.divisibility->q)},
                            {"sum_ok", p.divisibility->sum_ok},
                            {"diff_ok", p.divisibility->diff_ok}};
    } else {
      pj["divisibility"] = nullptr;
    }
    parts.push_back(std::move(pj));
  }
  j["partitions"] = parts;
  const auto& m = r.membership;
  j["membership"] = {{"g42", m.g42}, {"g42_minus1", m.g42_minus1}, {"g42_zero", m.g42_zero}, {"g4_ge_minus1", m.g4_ge_minus1}};
  j["family"] = m.recognized ? to_json(*m.recognized) : Json(nullptr);
  return j;
}

Json construct_record(const FamilyDescriptor& d, const Graph& g, const std::optional<Spectrum>& closed_form,
                      const std::optional<Spectrum>& computed) {
  Json j;
  j["record"] = "construct";
  j["family"] = to_json(d);
  j["graph6"] = graph6_encode(g);
  j["order"] = g.order();
  j["closed_form"] = closed_form ? to_json(*closed_form) : Json(nullptr);
  j["computed"] = computed ? to_json(*computed) : Json(nullptr);
  j["spectra_equal"] = closed_form && computed ? Json(*closed_form == *computed) : Json(nullptr);
  return j;
}

Json graph_record(const Graph& g) {
  Json j = {{"record", "graph"}, {"graph6", graph6_encode(g)}, {"n", g.order()}};
  const auto k = regular_degree(g);
  j["k"] = k ? Json(*k) : Json(nullptr);
  return j;
}

Json integer_scan_entry_record(const IntegerScanEntry& e) {
  Json j = {{"record", "integer_scan_entry"}, {"n", e.n}, {"k", e.k}, {"alpha", e.alpha}};
  j["beta"] = str(e.beta);
  j["m"] = optional(e.m);
  j["c"] = optional(e.c);
  j["feasible"] = e.feasible;
  j["failed"] = e.failed.empty() ? Json(nullptr) : Json(e.failed);
  j["certificate"] = e.certificate;
  return j;
}

Json integer_scan_record(const IntegerScanReport& r) {
  Json j = {{"record", "integer_scan"}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"triples", r.entries.size()}};
  j["feasible"] = r.feasible_count;
  j["bound_violations"] = r.bound_violations;
  j["failures"] = Json::object();
  for (const auto& [stage, count] : r.failures) j["failures"][stage] = count;
  Json feasible = Json::array();
  for (const auto& e : r.entries) {
    if (e.feasible) feasible.push_back(integer_scan_entry_record(e));
  }
  j["feasible_entries"] = feasible;
  return j;
}

Json noninteger_scan_entry_record(const NonIntegerScanEntry& e) {
  Json j = {{"record", "noninteger_scan_entry"}, {"k", e.k}, {"n", e.n}, {"admissible_orders", e.admissible_orders}};
  j["alpha"] = e.alpha.to_string();
  j["beta"] = e.beta.to_string();
  j["partition_degree"] = str(e.partition_degree);
  j["same_adjacent"] = e.same_adjacent.to_string();
  j["same_nonadjacent"] = e.same_nonadjacent.to_string();
  j["feasible"] = e.feasible;
  j["certificate"] = e.certificate;
  j["pipeline"] = to_json(e.pipeline);
  return j;
}

Json noninteger_scan_record(long kmin, long kmax, const std::vector<NonIntegerScanEntry>& entries) {
  std::size_t feasible = 0;
  for (const auto& e : entries) feasible += e.feasible ? 1 : 0;
  return {{"record", "noninteger_scan"}, {"k_min", kmin}, {"k_max", kmax}, {"entries", entries.size()}, {"feasible", feasible}};
}

Json verification_record(const VerificationReport& r) {
  Json j = {{"record", "verification"}, {"theorem", theorem_name(r.id)}, {"statement", r.statement},
            {"search_space", r.search_space}, {"n_max", r.n_max}};
  Json census = Json::array();
  for (const auto& [nk, count] : r.census) census.push_back({{"n", nk.first}, {"k", nk.second}, {"count", count}});
  j["census"] = census;
  j["four_eigenvalue_graphs"] = r.four_eigenvalue_graphs;
  Json members = Json::array();
  for (const auto& m : r.members) {
    members.push_back({{"graph6", m.graph6}, {"n", m.n}, {"k", m.k}, {"family", m.family ? to_json(*m.family) : Json(nullptr)}});
  }
  j["members"] = members;
  Json ce = Json::array();
  for (const auto& [g6, why] : r.counterexamples) ce.push_back({{"graph6", g6}, {"reason", why}});
  j["counterexamples"] = ce;
  j["verified"] = r.verified();
  return j;
}

}  // namespace regspec
