#include "regspec/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "regspec/cli/analysis.hpp"
#include "regspec/cli/json.hpp"
#include "regspec/enumeration/enumerate.hpp"
#include "regspec/error.hpp"
#include "regspec/family/recognition.hpp"
#include "regspec/feasibility/scans.hpp"
#include "regspec/graph/families.hpp"
#include "regspec/graph/graph6.hpp"

namespace regspec {

namespace {

// Input or usage problem reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

EnumConfig load_config(const std::string& path, EnumConfig cfg) {
  if (path.empty()) return cfg;
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file " + path + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned()) throw UsageError("config file " + path + ": " + key + " must be a non-negative integer");
    if (key == "max_order") {
      cfg.max_order = value.get<std::size_t>();
    } else if (key == "max_layer") {
      cfg.max_layer = value.get<std::size_t>();
    } else if (key == "threads") {
      cfg.threads = value.get<unsigned>();
    } else {
      throw UsageError("config file " + path + ": unknown key " + key);
    }
  }
  return cfg;
}

std::optional<TaxonomyCase> taxonomy_from_code(const std::string& code) {
  for (auto c : {TaxonomyCase::ThreeOrMoreSimple, TaxonomyCase::TwoSimpleIntegral, TaxonomyCase::TwoSimpleQuadratic,
                 TaxonomyCase::OneSimpleAllIntegral, TaxonomyCase::OneSimpleQuadraticPair, TaxonomyCase::OneSimpleCubicTriple,
                 TaxonomyCase::NotFourEigenvalue}) {
    if (code == taxonomy_code(c) || code == taxonomy_name(c)) return c;
  }
  return std::nullopt;
}

struct Common {
  bool json = false;
  unsigned threads = 1;
  std::string config;
};

class Cli {
 public:
  Cli(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Exact spectral toolkit for regular graphs with four distinct eigenvalues", "regspec"};
    app.require_subcommand(1);
    setup_analyze(app);
    setup_construct(app);
    setup_enumerate(app);
    setup_scan(app);
    setup_verify(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kExitOk : kExitUsage;
    }
    try {
      return action_();
    } catch (const UsageError& e) {
      err_ << "regspec: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err_ << "regspec: " << e.what() << '\n';
      switch (e.code()) {
        case Errc::UnsplitResidual:
        case Errc::InconsistentSpectrum:
          return kExitInternal;
        default:
          return kExitUsage;
      }
    } catch (const std::exception& e) {
      err_ << "regspec: internal error: " << e.what() << '\n';
      return kExitInternal;
    }
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::function<int()> action_;

  // option storage
  Common common_;
  std::vector<std::string> graphs_;
  std::string family_;
  std::vector<long> params_;
  bool with_spectrum_ = false;
  std::size_t n_ = 0, k_ = 0;
  bool connected_ = false, four_eig_ = false;
  std::optional<long> second_least_ge_;
  std::string taxonomy_;
  std::optional<std::uint64_t> seed_;
  long nmin_ = 4, nmax_ = 30, kmin_ = 2, kmax_ = 200;
  bool all_entries_ = false;
  std::string theorem_;
  std::size_t verify_nmax_ = 10;

  void add_common(CLI::App* sub, bool threads) {
    sub->add_flag("--json", common_.json, "One JSON record per line");
    if (threads) {
      sub->add_option("--threads", common_.threads, "Worker threads")->check(CLI::Range(1U, 256U));
      sub->add_option("--config", common_.config, "JSON file with max_order, max_layer, threads");
    }
  }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  void setup_analyze(CLI::App& app) {
    auto* sub = app.add_subcommand("analyze", "Analyze graph6 graphs (arguments, else one per line on stdin)");
    sub->add_option("graphs", graphs_, "graph6 strings");
    add_common(sub, false);
    sub->callback([this] { action_ = [this] { return analyze_cmd(); }; });
  }

  int analyze_cmd() {
    std::vector<std::string> lines = graphs_;
    const bool from_stdin = lines.empty();
    if (from_stdin) {
      for (std::string line; std::getline(in_, line);) lines.push_back(line);
    }
    bool first = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string text = trim(lines[i]);
      if (text.empty()) continue;
      Graph g;
      try {
        g = graph6_decode(text);
      } catch (const Error& e) {
        throw UsageError((from_stdin ? "line " : "argument ") + std::to_string(i + 1) + ": " + e.what());
      }
      const AnalysisReport r = analyze(g);
      if (common_.json) {
        emit(analysis_record(r));
      } else {
        if (!first) out_ << '\n';
        out_ << to_text(r);
      }
      first = false;
    }
    return kExitOk;
  }

  void setup_construct(CLI::App& app) {
    auto* sub = app.add_subcommand("construct", "Build a family member and print its graph6");
    sub->add_option("family", family_, "complete, cycle, complete-bipartite, complete-multipartite, crown, kss-expand, "
                                       "crown-expand, complement-crown-expand, a-graph, b-graph, incidence")
        ->required();
    sub->add_option("params", params_, "Integer parameters; for incidence: v followed by a base block of Z_v");
    sub->add_flag("--spectrum", with_spectrum_, "Also print the closed-form spectrum and check it against the computed one");
    add_common(sub, false);
    sub->callback([this] { action_ = [this] { return construct_cmd(); }; });
  }

  int construct_cmd() {
    const auto tag = family_from_name(family_);
    if (!tag) throw UsageError("unknown family " + family_);
    FamilyDescriptor d{*tag, params_, {}};
    if (*tag == FamilyTag::IncidenceGraph) {
      if (params_.size() < 2) throw UsageError("incidence needs v and a base block");
      d.incidence = cyclic_design(params_[0], std::vector<long>(params_.begin() + 1, params_.end()));
      const DesignParams p = design_params(d.incidence);
      d.params = {p.v, p.k, p.lambda};
    }
    const Graph g = construct(d);
    std::optional<Spectrum> closed, computed;
    std::string note;
    if (with_spectrum_) {
      computed = spectrum(g);
      try {
        closed = family_spectrum(d);
      } catch (const Error& e) {
        if (e.code() != Errc::NoClosedForm) throw;
        note = "none (no closed form for this family)";
      }
    }
    if (common_.json) {
      emit(construct_record(d, g, closed, computed));
    } else {
      out_ << graph6_encode(g) << '\n';
      if (with_spectrum_) {
        out_ << "closed form  " << (closed ? closed->to_string() : note) << '\n';
        out_ << "computed     " << computed->to_string() << '\n';
      }
    }
    if (exit_code(closed, computed) != kExitOk) {
      err_ << "regspec: closed-form spectrum " << closed->to_string() << " differs from computed " << computed->to_string()
           << " for " << d.to_string() << '\n';
      return kExitCounterexample;
    }
    return kExitOk;
  }

  void setup_enumerate(CLI::App& app) {
    auto* sub = app.add_subcommand("enumerate", "Stream k-regular graphs on n vertices, one per isomorphism class");
    sub->add_option("n", n_, "Order")->required();
    sub->add_option("k", k_, "Degree")->required();
    sub->add_flag("--connected", connected_, "Connected graphs only");
    sub->add_flag("--four-eig", four_eig_, "Exactly four distinct eigenvalues");
    sub->add_option("--second-least-ge", second_least_ge_, "Second least eigenvalue (with multiplicity) at least this");
    sub->add_option("--taxonomy", taxonomy_, "Taxonomy code: 1, 2a, 2b, 3a, 3b, 3c or none");
    sub->add_option("--seed", seed_, "Randomize the internal search order");
    add_common(sub, true);
    sub->callback([this] { action_ = [this] { return enumerate_cmd(); }; });
  }

  EnumConfig config() const {
    EnumConfig cfg;
    cfg = load_config(common_.config, cfg);
    if (common_.threads > 1) cfg.threads = common_.threads;
    return cfg;
  }

  int enumerate_cmd() {
    EnumSpec spec;
    spec.n = n_;
    spec.k = k_;
    spec.connected_only = connected_;
    if (four_eig_) spec.filters.distinct_eigenvalues = 4;
    spec.filters.second_least_at_least = second_least_ge_;
    if (!taxonomy_.empty()) {
      const auto t = taxonomy_from_code(taxonomy_);
      if (!t) throw UsageError("unknown taxonomy code " + taxonomy_);
      spec.filters.taxonomy = t;
    }
    EnumConfig cfg = config();
    cfg.seed = seed_;
    enumerate_regular(spec, cfg, [&](const Graph& g) {
      if (common_.json) {
        emit(graph_record(g));
      } else {
        out_ << graph6_encode(g) << '\n';
      }
    });
    return kExitOk;
  }

  void setup_scan(CLI::App& app) {
    auto* sub = app.add_subcommand("scan", "Feasibility scans for G(4,2,-1) spectra");
    sub->require_subcommand(1);
    auto* integer = sub->add_subcommand("integer", "Integral spectra {[k],[-1],[alpha]^m,[beta]^(n-2-m)}, even n");
    integer->add_option("--nmax", nmax_, "Largest order")->check(CLI::Range(4L, 100000L));
    integer->add_option("--nmin", nmin_, "Smallest order")->check(CLI::Range(4L, 100000L));
    integer->add_flag("--all", all_entries_, "Report every triple, not only the summary");
    add_common(integer, true);
    integer->callback([this] { action_ = [this] { return scan_integer_cmd(); }; });

    auto* nonint = sub->add_subcommand("noninteger", "Spectra {[k],[-1],[alpha]^m,[beta]^m} with conjugate quadratics");
    nonint->add_option("--kmax", kmax_, "Largest degree")->check(CLI::Range(2L, 1000000L));
    nonint->add_option("--kmin", kmin_, "Smallest degree")->check(CLI::Range(2L, 1000000L));
    add_common(nonint, false);
    nonint->callback([this] { action_ = [this] { return scan_noninteger_cmd(); }; });
  }

  int scan_integer_cmd() {
    if (nmin_ > nmax_) throw UsageError("--nmin exceeds --nmax");
    const IntegerScanReport r = scan_integer(nmax_, config().threads, nmin_);
    if (common_.json) {
      if (all_entries_) {
        for (const auto& e : r.entries) emit(integer_scan_entry_record(e));
      }
      emit(integer_scan_record(r));
    } else {
      if (all_entries_) {
        for (const auto& e : r.entries) {
          out_ << "n=" << e.n << " k=" << e.k << " alpha=" << e.alpha << ' '
               << (e.feasible ? std::string("feasible") : "fails " + e.failed) << ": " << e.certificate << '\n';
        }
      }
      out_ << "integer scan, even n in [" << r.n_min << ", " << r.n_max << "]: " << r.entries.size() << " triples, "
           << r.feasible_count << " feasible triples\n";
      out_ << "c >= 4(n-k-1)/n violations: " << r.bound_violations << '\n';
      for (const auto& [stage, count] : r.failures) out_ << "failed at " << stage << ": " << count << '\n';
    }
    if (exit_code(r) == kExitOk) return kExitOk;
    for (const auto& e : r.entries) {
      if (e.feasible) err_ << "regspec: feasible triple n=" << e.n << " k=" << e.k << " alpha=" << e.alpha << ": " << e.certificate << '\n';
    }
    return kExitCounterexample;
  }

  int scan_noninteger_cmd() {
    if (kmin_ > kmax_) throw UsageError("--kmin exceeds --kmax");
    const auto entries = scan_noninteger(kmin_, kmax_);
    std::size_t feasible = 0;
    for (const auto& e : entries) {
      feasible += e.feasible ? 1 : 0;
      if (common_.json) {
        emit(noninteger_scan_entry_record(e));
      } else {
        out_ << "k=" << e.k << " n=" << e.n << ' ' << (e.feasible ? "feasible" : "infeasible") << ": " << e.certificate << '\n';
      }
    }
    if (common_.json) {
      emit(noninteger_scan_record(kmin_, kmax_, entries));
    } else {
      out_ << "noninteger scan, k in [" << kmin_ << ", " << kmax_ << "]: " << feasible << " feasible\n";
    }
    if (exit_code(entries) == kExitOk) return kExitOk;
    for (const auto& e : entries) {
      if (e.feasible) err_ << "regspec: no contradiction for k=" << e.k << ": " << e.certificate << '\n';
    }
    return kExitCounterexample;
  }

  void setup_verify(CLI::App& app) {
    auto* sub = app.add_subcommand("verify", "Check a statement over all connected regular graphs up to --nmax vertices");
    sub->add_option("theorem", theorem_, "thm3.1, thm3.6, thm3.9, thm3.10 or lem2.2")->required();
    sub->add_option("--nmax", verify_nmax_, "Largest order")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    add_common(sub, true);
    sub->callback([this] { action_ = [this] { return verify_cmd(); }; });
  }

  int verify_cmd() {
    const auto id = theorem_from_name(theorem_);
    if (!id) throw UsageError("unknown theorem " + theorem_ + " (thm3.1, thm3.6, thm3.9, thm3.10, lem2.2)");
    const VerificationReport r = verify_theorem(*id, verify_nmax_, config());
    if (common_.json) {
      emit(verification_record(r));
    } else {
      out_ << "theorem       " << theorem_name(r.id) << ": " << r.statement << '\n';
      out_ << "search space  " << r.search_space << '\n';
      std::size_t total = 0;
      for (const auto& [nk, count] : r.census) total += count;
      out_ << "graphs        " << total << " (" << r.four_eigenvalue_graphs << " with four distinct eigenvalues)\n";
      std::size_t last_n = 0;
      for (const auto& [nk, count] : r.census) {
        if (nk.first != last_n) out_ << (last_n ? "\n" : "") << "census n=" << nk.first << ':';
        out_ << " k=" << nk.second << ':' << count;
        last_n = nk.first;
      }
      out_ << '\n';
      if (*id == TheoremId::Thm36 || *id == TheoremId::Thm39 || *id == TheoremId::Thm310) {
        out_ << "members       " << r.members.size() << '\n';
        for (const auto& m : r.members) {
          out_ << "  " << (m.family ? m.family->to_string() : "unrecognized") << " n=" << m.n << " k=" << m.k << ' ' << m.graph6
               << '\n';
        }
      }
      out_ << "counterexamples " << r.counterexamples.size() << '\n';
      out_ << (r.verified() ? "verified" : "NOT verified") << '\n';
    }
    for (const auto& [g6, why] : r.counterexamples) err_ << "regspec: counterexample " << g6 << ": " << why << '\n';
    return exit_code(r);
  }
};

}  // namespace

int exit_code(const IntegerScanReport& r) { return r.feasible_count == 0 ? kExitOk : kExitCounterexample; }

int exit_code(const std::vector<NonIntegerScanEntry>& entries) {
  for (const auto& e : entries) {
    if (e.feasible) return kExitCounterexample;
  }
  return kExitOk;
}

int exit_code(const VerificationReport& r) { return r.verified() ? kExitOk : kExitCounterexample; }

int exit_code(const std::optional<Spectrum>& closed_form, const std::optional<Spectrum>& computed) {
  return closed_form && computed && !(*closed_form == *computed) ? kExitCounterexample : kExitOk;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  return Cli(in, out, err).run(argc, argv);
}

}  // namespace regspec
