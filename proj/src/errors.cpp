#include "srgddg/errors.hpp"

namespace srgddg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NoHoffmanBound: return "NoHoffmanBound";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::DegenerateDesign: return "DegenerateDesign";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::DesignMismatch: return "DesignMismatch";
    case ErrorCode::PhiNotBijective: return "PhiNotBijective";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
  }
  return "Unknown";
}

}  // namespace srgddg
