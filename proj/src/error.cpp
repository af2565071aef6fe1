#include "cmred/error.hpp"

namespace cmred {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SingularModel: return "SingularModel";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::ZeroTwist: return "ZeroTwist";
    case ErrorKind::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::InvalidMu: return "InvalidMu";
    case ErrorKind::MissingInvariant: return "MissingInvariant";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace cmred
