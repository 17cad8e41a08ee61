#include "llc/errors.hpp"

namespace llc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidPrime: return "INVALID_PRIME";
    case ErrorCode::InvalidPrimePower: return "INVALID_PRIME_POWER";
    case ErrorCode::EllIsTwo: return "ELL_IS_TWO";
    case ErrorCode::CharacteristicTwo: return "CHARACTERISTIC_TWO";
    case ErrorCode::EllEqualsCharacteristic: return "ELL_EQUALS_CHARACTERISTIC";
    case ErrorCode::InvalidRank: return "INVALID_RANK";
    case ErrorCode::UnsupportedFamily: return "UNSUPPORTED_FAMILY";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::TorusExpected: return "TORUS_EXPECTED";
    case ErrorCode::InfiniteGroup: return "INFINITE_GROUP";
    case ErrorCode::CoefficientMismatch: return "COEFFICIENT_MISMATCH";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::InvalidWeylTwist: return "INVALID_WEYL_TWIST";
    case ErrorCode::ModulusTooLarge: return "MODULUS_TOO_LARGE";
    case ErrorCode::InternalError: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace llc
