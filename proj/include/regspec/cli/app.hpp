#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "regspec/enumeration/enumerate.hpp"
#include "regspec/feasibility/scans.hpp"
#include "regspec/spectral/spectrum.hpp"

namespace regspec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitCounterexample = 3,
};

/// Exit code for a finished report: 3 when it holds a counterexample
/// (a feasible scan entry, a violated statement, a closed form that
/// disagrees with the computed spectrum), else 0.
int exit_code(const IntegerScanReport& r);
int exit_code(const std::vector<NonIntegerScanEntry>& entries);
int exit_code(const VerificationReport& r);
int exit_code(const std::optional<Spectrum>& closed_form, const std::optional<Spectrum>& computed);

/// Runs `regspec <subcommand> ...` with the given streams and returns the
/// exit code. Subcommands: analyze, construct, enumerate, scan, verify.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace regspec
