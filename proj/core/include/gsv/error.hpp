#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsv {

enum class ErrorCode {
  // group presentation and characters
  EvenPrimeInverted,
  InvalidPrimeSet,
  EvenM,
  NonPositiveGenerator,
  IndexOutsideT,
  UnrepresentableRoot,
  ZeroScale,
  NotInScaleGroup,
  // algebra elements
  MixedPresentation,
  IndexDomain,
  // automorphisms
  MissingEntry,
  NotInIdeal,
  // Verma modules
  DenseWithoutTruncation,
  DepthBeyondTruncation,
  InvalidTruncation,
  ZeroVector,
  CZero,
  NonHomogeneous,
  // text input
  Syntax,
  DivisionByZero,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code identifies the failed precondition, the message carries context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsv
