#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barycoords {

enum class ErrorCode {
  TooFewVertices,
  NotConvex,
  WrongOrientation,
  DegenerateTriple,
  DegenerateTriangle,
  DegenerateSimplex,
  OutsidePolygon,
  NotInterior,
  NoConvergence,
  BadWeights,
  OutOfRange,
  DegenerateGeometry,
  InvalidDecomposition,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::OutsidePolygon: return "OutsidePolygon";
    case ErrorCode::NotInterior: return "NotInterior";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace barycoords
