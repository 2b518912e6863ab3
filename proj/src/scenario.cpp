#include "imogeo/scenario.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

#include "imogeo/error.hpp"

namespace imogeo {

std::string_view ordering_name(Ordering ordering) noexcept {
  switch (ordering) {
    case Ordering::Intersecting_ABCD: return "Intersecting_ABCD";
    case Ordering::Disjoint_ACBD: return "Disjoint_ACBD";
    case Ordering::ExternallyTangent: return "ExternallyTangent";
  }
  return "Unknown";
}

Ordering validate(const ScenarioConfig& cfg) {
  auto reject = [](const std::string& reason) { throw GeometryError(ErrorKind::InvalidScenario, reason); };
  if (cfg.a.sign() <= 0) reject("a must be positive, got " + cfg.a.to_string());
  if (cfg.r1.sign() <= 0) reject("r1 must be positive, got " + cfg.r1.to_string());
  if (cfg.r2.sign() <= 0) reject("r2 must be positive, got " + cfg.r2.to_string());

  const Rational span = Rational(2) * cfg.a;
  if (span <= (cfg.r1 - cfg.r2).abs()) {
    reject("one circle contains the other (2a <= |r1 - r2|)");
  }
  const Rational sum = cfg.r1 + cfg.r2;
  if (span < sum) return Ordering::Intersecting_ABCD;
  if (span == sum) return Ordering::ExternallyTangent;
  return Ordering::Disjoint_ACBD;
}

Rational radical_axis_abscissa(const ScenarioConfig& cfg) {
  return (cfg.r1.squared() - cfg.r2.squared()) / (Rational(4) * cfg.a);
}

DerivedScene derive(const ScenarioConfig& cfg) {
  const Ordering ordering = validate(cfg);
  const Rational& a = cfg.a;
  const Rational x_radical = radical_axis_abscissa(cfg);
  return DerivedScene{
      .config = cfg,
      .ordering = ordering,
      .k1 = Circle(Point2{-a, 0}, cfg.r1),
      .k2 = Circle(Point2{a, 0}, cfg.r2),
      .A = Point2{-a - cfg.r1, 0},
      .B = Point2{a - cfg.r2, 0},
      .C = Point2{-a + cfg.r1, 0},
      .D = Point2{a + cfg.r2, 0},
      .axis = Line::horizontal(0),
      .radical_axis_x = x_radical,
      .Z = Point2{x_radical, 0},
  };
}

Line probe_line(const ScenarioConfig& /*cfg*/, const Rational& p) { return Line::vertical(p); }

ScenarioConfig parse_scenario(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw GeometryError(ErrorKind::ParseError, std::string("scenario JSON: ") + e.what());
    }
    auto field = [&doc](const char* key) {
      if (!doc.contains(key) || !doc[key].is_string()) {
        throw GeometryError(ErrorKind::ParseError,
                            std::string("scenario JSON needs string field \"") + key + "\"");
      }
      return Rational::parse(doc[key].get<std::string>());
    };
    return ScenarioConfig{field("a"), field("r1"), field("r2")};
  }

  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  if (tokens.size() != 3) {
    throw GeometryError(ErrorKind::ParseError, "scenario needs exactly three values \"a r1 r2\"");
  }
  return ScenarioConfig{Rational::parse(tokens[0]), Rational::parse(tokens[1]), Rational::parse(tokens[2])};
}

}  // namespace imogeo
