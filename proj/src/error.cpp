#include "regspec/error.hpp"

namespace regspec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::NotAnEigenvalue: return "NotAnEigenvalue";
    case Errc::NotSimple: return "NotSimple";
    case Errc::OddOrder: return "OddOrder";
    case Errc::NotPlusMinusOne: return "NotPlusMinusOne";
    case Errc::NonIntegralEigenvalue: return "NonIntegralEigenvalue";
    case Errc::InconsistentSpectrum: return "InconsistentSpectrum";
    case Errc::UnsplitResidual: return "UnsplitResidual";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NoClosedForm: return "NoClosedForm";
  }
  return "Unknown";
}

}  // namespace regspec
