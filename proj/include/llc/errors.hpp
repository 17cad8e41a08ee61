#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace llc {

enum class ErrorCode {
  InvalidArgument,
  InvalidPrime,
  InvalidPrimePower,
  EllIsTwo,
  CharacteristicTwo,
  EllEqualsCharacteristic,
  InvalidRank,
  UnsupportedFamily,
  DimensionMismatch,
  TorusExpected,
  InfiniteGroup,
  CoefficientMismatch,
  ShapeMismatch,
  InvalidWeylTwist,
  ModulusTooLarge,
  InternalError,
};

/// Stable machine-readable name, e.g. "INVALID_PRIME".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string hint = {})
      : std::runtime_error(message), code_(code), hint_(std::move(hint)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& hint() const noexcept { return hint_; }

 private:
  ErrorCode code_;
  std::string hint_;
};

}  // namespace llc
