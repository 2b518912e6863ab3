#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace imogeo {

enum class ErrorKind {
  ParseError,
  ZeroDenominator,
  DivisionByZero,
  InvalidCircle,
  IdenticalPoints,
  CoincidentLines,
  PointNotOnCircle,
  ConcentricCircles,
  InvalidScenario,
  DegenerateProbe,
  WrongOrdering,
  IndeterminateParam,
};

/// Stable identifier for an error kind; used verbatim in CLI diagnostics.
std::string_view error_name(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported through this type.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace imogeo
