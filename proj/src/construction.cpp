#include "imogeo/construction.hpp"

#include <array>

#include "imogeo/error.hpp"

namespace imogeo {

namespace {

constexpr std::array kNamedFlags = {
    CaseFlag::ProbeOnAxis, CaseFlag::CollapsesToA, CaseFlag::CollapsesToD,
    CaseFlag::TouchingCircles, CaseFlag::OnRadicalAxis,
};

void reject_degenerate(const DerivedScene& scene, const ProbePoint& probe) {
  const Point2 p = probe.point();
  if (p == scene.C) throw GeometryError(ErrorKind::DegenerateProbe, "probe coincides with C; line CP is undefined");
  if (p == scene.B) throw GeometryError(ErrorKind::DegenerateProbe, "probe coincides with B; line BP is undefined");
}

}  // namespace

std::string_view case_flag_name(CaseFlag flag) noexcept {
  switch (flag) {
    case CaseFlag::Generic: return "Generic";
    case CaseFlag::ProbeOnAxis: return "ProbeOnAxis";
    case CaseFlag::CollapsesToA: return "CollapsesToA";
    case CaseFlag::CollapsesToD: return "CollapsesToD";
    case CaseFlag::TouchingCircles: return "TouchingCircles";
    case CaseFlag::OnRadicalAxis: return "OnRadicalAxis";
  }
  return "Unknown";
}

std::vector<std::string_view> CaseClassification::names() const {
  if (is_generic()) return {case_flag_name(CaseFlag::Generic)};
  std::vector<std::string_view> out;
  for (CaseFlag flag : kNamedFlags) {
    if (has(flag)) out.push_back(case_flag_name(flag));
  }
  return out;
}

Point2 construct_M(const DerivedScene& scene, const ProbePoint& probe) {
  if (probe.point() == scene.C) {
    throw GeometryError(ErrorKind::DegenerateProbe, "probe coincides with C; line CP is undefined");
  }
  return second_intersection(scene.k1, scene.C, probe.point());
}

Point2 construct_N(const DerivedScene& scene, const ProbePoint& probe) {
  if (probe.point() == scene.B) {
    throw GeometryError(ErrorKind::DegenerateProbe, "probe coincides with B; line BP is undefined");
  }
  return second_intersection(scene.k2, scene.B, probe.point());
}

ImageResult construct_image_geometric(const DerivedScene& scene, const ProbePoint& probe) {
  reject_degenerate(scene, probe);
  Point2 m = construct_M(scene, probe);
  Point2 n = construct_N(scene, probe);
  Line am = m == scene.A ? tangent_at(scene.k1, scene.A) : line_through(scene.A, m);
  Line dn = n == scene.D ? tangent_at(scene.k2, scene.D) : line_through(scene.D, n);

  // Both lines are the center line only when the circles touch and P sits
  // on their common tangent; nearby probes give parallels in this direction.
  ExtendedPoint image = am == dn ? ExtendedPoint(am.direction()) : meet(am, dn);

  return ImageResult{
      .M = std::move(m),
      .N = std::move(n),
      .lineAM = std::move(am),
      .lineDN = std::move(dn),
      .Pprime = std::move(image),
      .classification = classify_case(scene.config, probe),
  };
}

ExtendedPoint image_closed_form(const ScenarioConfig& cfg, const ProbePoint& probe) {
  const DerivedScene scene = derive(cfg);
  reject_degenerate(scene, probe);

  const Rational& a = cfg.a;
  const Rational& r1 = cfg.r1;
  const Rational& r2 = cfg.r2;
  const Rational& p = probe.p;
  const Rational& q = probe.q;

  const Rational gap = r1 + r2 - Rational(2) * a;
  if (gap.is_zero()) {
    // Perpendicular to the chord direction P - C.
    return ExtendedPoint::at_infinity(-q, p - scene.C.x);
  }
  if (q.is_zero()) return ExtendedPoint::at_infinity(0, 1);

  const Rational spread = r1 + r2 + Rational(2) * a;
  return Point2{
      (r2.squared() - r1.squared() + p * spread) / gap,
      spread * (a - r1 + p) * (a - r2 - p) / (q * gap),
  };
}

ExtendedScalar locus_x(const ScenarioConfig& cfg, const Rational& p) {
  validate(cfg);
  const Rational gap = cfg.r1 + cfg.r2 - Rational(2) * cfg.a;
  if (gap.is_zero()) return ExtendedScalar::infinity();
  const Rational spread = cfg.r1 + cfg.r2 + Rational(2) * cfg.a;
  return (cfg.r2.squared() - cfg.r1.squared() + p * spread) / gap;
}

CaseClassification classify_case(const ScenarioConfig& cfg, const ProbePoint& probe) {
  validate(cfg);
  CaseClassification out;
  if (probe.q.is_zero()) out.set(CaseFlag::ProbeOnAxis);
  if (probe.p == cfg.a - cfg.r2) out.set(CaseFlag::CollapsesToA);
  if (probe.p == cfg.r1 - cfg.a) out.set(CaseFlag::CollapsesToD);
  if (cfg.r1 + cfg.r2 == Rational(2) * cfg.a) out.set(CaseFlag::TouchingCircles);
  if (probe.p == radical_axis_abscissa(cfg)) out.set(CaseFlag::OnRadicalAxis);
  return out;
}

HalfAngleParams tangent_half_params(const ScenarioConfig& cfg, const ProbePoint& probe) {
  validate(cfg);
  auto ratio = [](const Rational& num, const Rational& den, const char* which) -> ExtendedScalar {
    if (!den.is_zero()) return num / den;
    if (num.is_zero()) {
      throw GeometryError(ErrorKind::IndeterminateParam, std::string(which) + " is 0/0");
    }
    return ExtendedScalar::infinity();
  };
  return HalfAngleParams{
      .u = ratio(cfg.r1 - cfg.a - probe.p, probe.q, "u"),
      .v = ratio(probe.q, cfg.r2 - cfg.a + probe.p, "v"),
  };
}

std::vector<ConcurrencySample> concurrency_samples(const ScenarioConfig& cfg, std::span<const Rational> q_samples) {
  const DerivedScene scene = derive(cfg);
  if (scene.ordering != Ordering::Intersecting_ABCD) {
    throw GeometryError(ErrorKind::WrongOrdering,
                        std::string("concurrency needs intersecting circles, scenario is ") +
                            std::string(ordering_name(scene.ordering)));
  }
  std::vector<ConcurrencySample> out;
  out.reserve(q_samples.size());
  for (const Rational& q : q_samples) {
    if (q.is_zero()) throw GeometryError(ErrorKind::DegenerateProbe, "q sample 0 puts the probe at Z");
    ImageResult image = construct_image_geometric(scene, ProbePoint{scene.radical_axis_x, q});
    const bool ok = image.Pprime.is_finite() && image.Pprime.point().x == scene.radical_axis_x;
    out.push_back(ConcurrencySample{q, std::move(image.Pprime), ok});
  }
  return out;
}

bool verify_concurrency(const ScenarioConfig& cfg, std::span<const Rational> q_samples) {
  for (const auto& sample : concurrency_samples(cfg, q_samples)) {
    if (!sample.concurrent) return false;
  }
  return true;
}

}  // namespace imogeo
