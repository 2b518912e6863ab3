#pragma once

#include <string>
#include <string_view>

#include "imogeo/kernel.hpp"

namespace imogeo {

/// Two circles centered at (-a, 0) and (a, 0) with radii r1 and r2.
struct ScenarioConfig {
  Rational a;
  Rational r1;
  Rational r2;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Order of A, B, C, D along the center line.
enum class Ordering {
  Intersecting_ABCD,
  Disjoint_ACBD,
  ExternallyTangent,
};

std::string_view ordering_name(Ordering ordering) noexcept;

struct DerivedScene {
  ScenarioConfig config;
  Ordering ordering;
  Circle k1;
  Circle k2;
  Point2 A;
  Point2 B;
  Point2 C;
  Point2 D;
  Line axis;
  Rational radical_axis_x;
  /// Foot of the radical axis on the center line.
  Point2 Z;
};

/// Throws InvalidScenario for non-positive inputs or when one circle lies
/// inside (or internally touches) the other, i.e. 2a <= |r1 - r2|.
Ordering validate(const ScenarioConfig& cfg);

DerivedScene derive(const ScenarioConfig& cfg);

/// The vertical line x = p.
Line probe_line(const ScenarioConfig& cfg, const Rational& p);

/// (r1^2 - r2^2) / (4a).
Rational radical_axis_abscissa(const ScenarioConfig& cfg);

/// Accepts "a r1 r2" (whitespace separated) or a JSON object
/// {"a": "...", "r1": "...", "r2": "..."} whose values are rational strings.
/// Throws ParseError.
ScenarioConfig parse_scenario(std::string_view text);

}  // namespace imogeo
