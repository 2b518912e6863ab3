#include "imogeo/kernel.hpp"

#include "imogeo/error.hpp"

namespace imogeo {

namespace {

std::string describe(const Point2& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

void require_on_circle(const Circle& k, const Point2& q) {
  if (!circle_contains(k, q)) {
    throw GeometryError(ErrorKind::PointNotOnCircle, describe(q) + " is not on the circle");
  }
}

}  // namespace

Direction::Direction(const Rational& dx, const Rational& dy) {
  if (dx.is_zero() && dy.is_zero()) {
    throw GeometryError(ErrorKind::IdenticalPoints, "direction (0, 0) is undefined");
  }
  // Clear denominators, then divide out the common factor.
  mpz_class lcm;
  mpz_lcm(lcm.get_mpz_t(), dx.denominator().get_mpz_t(), dy.denominator().get_mpz_t());
  mpz_class x = dx.numerator() * (lcm / dx.denominator());
  mpz_class y = dy.numerator() * (lcm / dy.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  x /= g;
  y /= g;
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  dx_ = Rational(mpq_class(x));
  dy_ = Rational(mpq_class(y));
}

Line::Line(Rational alpha, Rational beta, Rational gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (alpha_.is_zero() && beta_.is_zero()) {
    throw GeometryError(ErrorKind::CoincidentLines, "line with zero normal vector");
  }
  const Rational lead = alpha_.is_zero() ? beta_ : alpha_;
  alpha_ /= lead;
  beta_ /= lead;
  gamma_ /= lead;
}

Circle::Circle(Point2 center, Rational radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) {
    throw GeometryError(ErrorKind::InvalidCircle, "radius must be positive, got " + radius_.to_string());
  }
}

Line line_through(const Point2& p1, const Point2& p2) {
  if (p1 == p2) throw GeometryError(ErrorKind::IdenticalPoints, "no unique line through " + describe(p1));
  return Line(p1.y - p2.y, p2.x - p1.x, p1.x * p2.y - p2.x * p1.y);
}

ExtendedPoint meet(const Line& l1, const Line& l2) {
  if (l1 == l2) throw GeometryError(ErrorKind::CoincidentLines, "lines coincide");
  const Rational det = l1.alpha() * l2.beta() - l2.alpha() * l1.beta();
  if (det.is_zero()) return l1.direction();
  return Point2{(l1.beta() * l2.gamma() - l2.beta() * l1.gamma()) / det,
                (l1.gamma() * l2.alpha() - l2.gamma() * l1.alpha()) / det};
}

Rational collinear_det(const Point2& p1, const Point2& p2, const Point2& p3) {
  return p1.x * (p2.y - p3.y) - p1.y * (p2.x - p3.x) + (p2.x * p3.y - p3.x * p2.y);
}

Rational power_of_point(const Circle& k, const Point2& p) {
  return (p.x - k.center().x).squared() + (p.y - k.center().y).squared() - k.radius().squared();
}

bool circle_contains(const Circle& k, const Point2& p) { return power_of_point(k, p).is_zero(); }

Point2 param_point(const Circle& k, const ExtendedScalar& t) {
  const Point2& c = k.center();
  const Rational& r = k.radius();
  if (t.is_infinite()) return Point2{c.x - r, c.y};
  const Rational t2 = t.value().squared();
  const Rational denom = Rational(1) + t2;
  return Point2{c.x + r * (Rational(1) - t2) / denom, c.y + Rational(2) * r * t.value() / denom};
}

Point2 second_intersection(const Circle& k, const Point2& q, const Point2& p) {
  require_on_circle(k, q);
  if (p == q) throw GeometryError(ErrorKind::IdenticalPoints, "chord endpoint equals base point " + describe(q));

  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  // |Q + t d - c|^2 - r^2 = |d|^2 t^2 + 2 (d . (Q - c)) t, roots 0 and t*.
  const Rational quadratic = dx.squared() + dy.squared();
  const Rational linear = Rational(2) * (dx * (q.x - k.center().x) + dy * (q.y - k.center().y));
  const Rational t = -linear / quadratic;
  return Point2{q.x + t * dx, q.y + t * dy};
}

Line tangent_at(const Circle& k, const Point2& q) {
  require_on_circle(k, q);
  const Rational nx = q.x - k.center().x;
  const Rational ny = q.y - k.center().y;
  return Line(nx, ny, -(nx * q.x + ny * q.y));
}

Line radical_axis(const Circle& k1, const Circle& k2) {
  const Point2& c1 = k1.center();
  const Point2& c2 = k2.center();
  if (c1 == c2) throw GeometryError(ErrorKind::ConcentricCircles, "circles share center " + describe(c1));
  const Rational two(2);
  return Line(two * (c2.x - c1.x), two * (c2.y - c1.y),
              (c1.x.squared() + c1.y.squared() - k1.radius().squared()) -
                  (c2.x.squared() + c2.y.squared() - k2.radius().squared()));
}

}  // namespace imogeo
