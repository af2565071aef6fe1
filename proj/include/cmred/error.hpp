#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cmred {

enum class ErrorKind {
  InvalidArgument,
  NegativeValuation,
  ZeroPolynomial,
  SingularModel,
  ZeroScale,
  ZeroTwist,
  UnsupportedPlace,
  NotImaginary,
  HypothesisNotMet,
  InvalidMu,
  MissingInvariant,
  InvalidDegree,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// corpus runner) can tell domain errors apart without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cmred
