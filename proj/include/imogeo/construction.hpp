#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "imogeo/kernel.hpp"
#include "imogeo/scenario.hpp"

namespace imogeo {

/// The probe P = (p, q); p is also the abscissa of the probe line.
struct ProbePoint {
  Rational p;
  Rational q;

  Point2 point() const { return Point2{p, q}; }
  friend bool operator==(const ProbePoint&, const ProbePoint&) = default;
};

enum class CaseFlag : std::uint8_t {
  Generic = 0,
  ProbeOnAxis = 1U << 0U,
  CollapsesToA = 1U << 1U,
  CollapsesToD = 1U << 2U,
  TouchingCircles = 1U << 3U,
  OnRadicalAxis = 1U << 4U,
};

std::string_view case_flag_name(CaseFlag flag) noexcept;

/// Set of degeneracy flags; Generic means the set is empty.
class CaseClassification {
 public:
  CaseClassification() = default;

  void set(CaseFlag flag) { bits_ |= static_cast<std::uint8_t>(flag); }
  bool has(CaseFlag flag) const {
    return flag == CaseFlag::Generic ? bits_ == 0 : (bits_ & static_cast<std::uint8_t>(flag)) != 0;
  }
  bool is_generic() const { return bits_ == 0; }

  /// Flag names in declaration order; {"Generic"} for the empty set.
  std::vector<std::string_view> names() const;

  friend bool operator==(const CaseClassification&, const CaseClassification&) = default;

 private:
  std::uint8_t bits_ = 0;
};

struct ImageResult {
  Point2 M;
  Point2 N;
  Line lineAM;
  Line lineDN;
  ExtendedPoint Pprime;
  CaseClassification classification;
};

struct HalfAngleParams {
  ExtendedScalar u;
  ExtendedScalar v;
};

/// Second intersection of CP with k1. Throws DegenerateProbe when P = C.
Point2 construct_M(const DerivedScene& scene, const ProbePoint& probe);

/// Second intersection of BP with k2. Throws DegenerateProbe when P = B.
Point2 construct_N(const DerivedScene& scene, const ProbePoint& probe);

/**
 * Builds P' purely from synthetic steps: M and N by chord intersection,
 * lines AM and DN, then their meet.
 *
 * Limiting conventions: when M = A the line AM is the tangent to k1 at A,
 * and when N = D the line DN is the tangent to k2 at D. If AM and DN
 * coincide (touching circles with P on their common tangent) the image is
 * the point at infinity of that common line.
 */
ImageResult construct_image_geometric(const DerivedScene& scene, const ProbePoint& probe);

/**
 * P' from the closed-form coordinates
 *
 *   p' = (r2^2 - r1^2 + p (r1 + r2 + 2a)) / (r1 + r2 - 2a)
 *   q' = (r1 + r2 + 2a)(a - r1 + p)(a - r2 - p) / (q (r1 + r2 - 2a))
 *
 * When q = 0 the image is the point at infinity of the vertical line x = p'.
 * When the circles touch, AM and DN are both perpendicular to the chord line
 * through C = B and P, and the image is the point at infinity in that
 * perpendicular direction.
 */
ExtendedPoint image_closed_form(const ScenarioConfig& cfg, const ProbePoint& probe);

/// Abscissa of the line carrying every image of probes on x = p; infinity
/// iff the circles touch.
ExtendedScalar locus_x(const ScenarioConfig& cfg, const Rational& p);

CaseClassification classify_case(const ScenarioConfig& cfg, const ProbePoint& probe);

/// u = (r1 - a - p) / q and v = q / (r2 - a + p), with a nonzero over zero
/// giving infinity. Throws IndeterminateParam on 0/0.
HalfAngleParams tangent_half_params(const ScenarioConfig& cfg, const ProbePoint& probe);

struct ConcurrencySample {
  Rational q;
  ExtendedPoint Pprime;
  bool concurrent;
};

/// Places P = (x_r, q) on the radical axis for each q and checks that AM and
/// DN meet on that axis. Throws WrongOrdering unless the circles intersect,
/// DegenerateProbe for q = 0.
std::vector<ConcurrencySample> concurrency_samples(const ScenarioConfig& cfg, std::span<const Rational> q_samples);

bool verify_concurrency(const ScenarioConfig& cfg, std::span<const Rational> q_samples);

}  // namespace imogeo
