#pragma once

#include <json.hpp>

#include "regspec/cli/analysis.hpp"
#include "regspec/enumeration/enumerate.hpp"
#include "regspec/feasibility/feasibility.hpp"
#include "regspec/feasibility/scans.hpp"
#include "regspec/graph/families.hpp"

namespace regspec {

using Json = nlohmann::json;

/// Exact values only; integers and rationals as decimal strings so that no
/// precision is lost. "decimal" fields are 6-place display annotations.
Json to_json(const AlgebraicNumber& x);
Json to_json(const Spectrum& s);
Json to_json(const FamilyDescriptor& d);
Json to_json(const FeasibilityReport& r);

/// Top-level records carry a "record" field naming their schema.
Json analysis_record(const AnalysisReport& r);
Json construct_record(const FamilyDescriptor& d, const Graph& g, const std::optional<Spectrum>& closed_form,
                      const std::optional<Spectrum>& computed);
Json graph_record(const Graph& g);
Json integer_scan_entry_record(const IntegerScanEntry& e);
Json integer_scan_record(const IntegerScanReport& r);
Json noninteger_scan_entry_record(const NonIntegerScanEntry& e);
Json noninteger_scan_record(long kmin, long kmax, const std::vector<NonIntegerScanEntry>& entries);
Json verification_record(const VerificationReport& r);

/// "%.6f" of a display approximation.
std::string decimal6(double x);

}  // namespace regspec
