#pragma once

#include <optional>
#include <string>
#include <variant>

#include "imogeo/rational.hpp"

namespace imogeo {

/// A rational or the symbolic value infinity.
class ExtendedScalar {
 public:
  ExtendedScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static ExtendedScalar infinity() { return ExtendedScalar(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Precondition: is_finite().
  const Rational& value() const { return *value_; }

  /// "infinity" or the canonical rational text.
  std::string to_string() const { return value_ ? value_->to_string() : "infinity"; }

  friend bool operator==(const ExtendedScalar&, const ExtendedScalar&) = default;

 private:
  ExtendedScalar() = default;
  std::optional<Rational> value_;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Direction of a point at infinity. Stored as coprime integers with the
/// first nonzero component positive, so equal directions compare equal.
class Direction {
 public:
  /// Throws IdenticalPoints on (0, 0).
  Direction(const Rational& dx, const Rational& dy);

  const Rational& dx() const { return dx_; }
  const Rational& dy() const { return dy_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rational dx_;
  Rational dy_;
};

/// A finite point or a point at infinity.
class ExtendedPoint {
 public:
  ExtendedPoint(Point2 point) : value_(std::move(point)) {}      // NOLINT(google-explicit-constructor)
  ExtendedPoint(Direction dir) : value_(std::move(dir)) {}       // NOLINT(google-explicit-constructor)
  static ExtendedPoint at_infinity(const Rational& dx, const Rational& dy) {
    return ExtendedPoint(Direction(dx, dy));
  }

  bool is_finite() const { return std::holds_alternative<Point2>(value_); }
  bool is_at_infinity() const { return !is_finite(); }
  const Point2& point() const { return std::get<Point2>(value_); }
  const Direction& direction() const { return std::get<Direction>(value_); }

  friend bool operator==(const ExtendedPoint&, const ExtendedPoint&) = default;

 private:
  std::variant<Point2, Direction> value_;
};

/**
 * The line alpha*x + beta*y + gamma = 0.
 *
 * Normalized on construction so that the first nonzero of (alpha, beta) is 1;
 * two lines are equal as values iff they are the same point set.
 */
class Line {
 public:
  /// Throws CoincidentLines if alpha = beta = 0.
  Line(Rational alpha, Rational beta, Rational gamma);

  static Line vertical(const Rational& x) { return Line(1, 0, -x); }
  static Line horizontal(const Rational& y) { return Line(0, 1, -y); }

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }

  Rational evaluate(const Point2& p) const { return alpha_ * p.x + beta_ * p.y + gamma_; }
  bool contains(const Point2& p) const { return evaluate(p).is_zero(); }
  bool is_vertical() const { return beta_.is_zero(); }
  bool is_parallel_to(const Line& other) const {
    return (alpha_ * other.beta_ - other.alpha_ * beta_).is_zero();
  }
  /// Direction vector (beta, -alpha), normalized.
  Direction direction() const { return Direction(beta_, -alpha_); }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Rational alpha_;
  Rational beta_;
  Rational gamma_;
};

class Circle {
 public:
  /// Throws GeometryError(InvalidCircle) unless radius > 0.
  Circle(Point2 center, Rational radius);

  const Point2& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  friend bool operator==(const Circle&, const Circle&) = default;

 private:
  Point2 center_;
  Rational radius_;
};

/// Throws IdenticalPoints when p1 == p2.
Line line_through(const Point2& p1, const Point2& p2);

/// Intersection of two lines; parallel distinct lines meet at infinity in
/// their common direction. Throws CoincidentLines when l1 == l2.
ExtendedPoint meet(const Line& l1, const Line& l2);

/// det [[x1 y1 1] [x2 y2 1] [x3 y3 1]]; zero iff the points are collinear.
Rational collinear_det(const Point2& p1, const Point2& p2, const Point2& p3);

Rational power_of_point(const Circle& k, const Point2& p);

bool circle_contains(const Circle& k, const Point2& p);

/// Tangent half-angle parametrization about the center; t = infinity gives
/// the leftmost point, t = 0 the rightmost.
Point2 param_point(const Circle& k, const ExtendedScalar& t);

/**
 * Second intersection of line QP with k, where Q lies on k.
 *
 * Substituting Q + t(P - Q) into the circle equation gives a quadratic in t
 * with the known root t = 0, so the other root is the negated ratio of the
 * linear to the quadratic coefficient. No square roots are taken. A tangent
 * line yields Q itself.
 *
 * Throws PointNotOnCircle if Q is not on k, IdenticalPoints if P == Q.
 */
Point2 second_intersection(const Circle& k, const Point2& q, const Point2& p);

/// Throws PointNotOnCircle.
Line tangent_at(const Circle& k, const Point2& q);

/// Line of equal power. Throws ConcentricCircles.
Line radical_axis(const Circle& k1, const Circle& k2);

}  // namespace imogeo
