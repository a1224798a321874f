#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regspec {

enum class Errc {
  InvalidArgument,
  ParameterOutOfRange,
  MalformedGraph6,
  NotAnEigenvalue,
  NotSimple,
  OddOrder,
  NotPlusMinusOne,
  NonIntegralEigenvalue,
  InconsistentSpectrum,
  UnsplitResidual,
  DegenerateDenominator,
  SearchSpaceTooLarge,
  NoClosedForm,
};

std::string_view to_string(Errc code) noexcept;

/// Library-wide exception. The code identifies the failure class; the message
/// carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace regspec
