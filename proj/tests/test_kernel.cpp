#include <gtest/gtest.h>

#include "imogeo/error.hpp"
#include "imogeo/kernel.hpp"
#include "oracles.hpp"

using namespace imogeo;

namespace {

Point2 pt(Rational x, Rational y) { return Point2{std::move(x), std::move(y)}; }

const Circle k1(pt(-2, 0), 3);  // worked-case k1
const Circle k2(pt(2, 0), 2);   // worked-case k2

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), Line(1, -1, 0));
  EXPECT_EQ(line_through(pt(-5, 0), pt(-2, -3)), Line(1, 1, 5));
  EXPECT_EQ(line_through(pt(3, 0), pt(3, 7)), Line(1, 0, -3));
  EXPECT_EQ(kind_of([] { (void)line_through(pt(1, 2), pt(1, 2)); }), ErrorKind::IdenticalPoints);
}

TEST(LineThrough, NormalizedCoefficients) {
  const Line l = line_through(pt(4, 0), pt(Rational(16, 5), Rational(8, 5)));
  EXPECT_EQ(l.alpha(), Rational(1));
  EXPECT_EQ(l.beta(), Rational(1, 2));
  EXPECT_EQ(l.gamma(), Rational(-4));
  const Line horizontal = line_through(pt(0, 3), pt(5, 3));
  EXPECT_EQ(horizontal.alpha(), Rational(0));
  EXPECT_EQ(horizontal.beta(), Rational(1));
}

TEST(Meet, Examples) {
  EXPECT_EQ(meet(Line::vertical(1), Line(1, -1, 0)), ExtendedPoint(pt(1, 1)));
  EXPECT_EQ(meet(Line::vertical(-5), Line::vertical(4)), ExtendedPoint::at_infinity(0, 1));
  EXPECT_EQ(meet(Line(1, 1, 5), Line(2, 1, -8)), ExtendedPoint(pt(13, -18)));
  EXPECT_EQ(kind_of([] { (void)meet(Line(1, 1, 5), Line(2, 2, 10)); }), ErrorKind::CoincidentLines);
}

TEST(Meet, AgreesWithParameterSolveOracle) {
  const Point2 a = pt(-5, 0), m = pt(-2, -3), d = pt(4, 0), n = pt(Rational(16, 5), Rational(8, 5));
  const ExtendedPoint got = meet(line_through(a, m), line_through(d, n));
  ASSERT_TRUE(got.is_finite());
  EXPECT_EQ(got.point(), oracle::two_line_intersection(a, m, d, n));
}

TEST(Direction, NormalizedAndInLowestTerms) {
  EXPECT_EQ(Direction(Rational(-2, 3), Rational(4, 9)), Direction(3, -2));
  EXPECT_EQ(Direction(0, Rational(-7, 2)), Direction(0, 1));
  const Direction dir(Rational(6), Rational(-4));
  EXPECT_EQ(dir.dx(), Rational(3));
  EXPECT_EQ(dir.dy(), Rational(-2));
  EXPECT_EQ(kind_of([] { (void)Direction(0, 0); }), ErrorKind::IdenticalPoints);
}

TEST(CollinearDet, Examples) {
  EXPECT_EQ(collinear_det(pt(0, 0), pt(1, 1), pt(2, 2)), Rational(0));
  EXPECT_EQ(collinear_det(pt(0, 0), pt(1, 0), pt(0, 1)), Rational(1));
  EXPECT_EQ(collinear_det(pt(2, 1), pt(1, 0), pt(-2, -3)), Rational(0));
}

TEST(CircleContains, Examples) {
  EXPECT_TRUE(circle_contains(k1, pt(1, 0)));
  EXPECT_TRUE(circle_contains(k1, pt(-2, -3)));
  EXPECT_FALSE(circle_contains(k1, pt(0, 0)));
}

TEST(Circle, RejectsNonPositiveRadius) {
  EXPECT_EQ(kind_of([] { (void)Circle(pt(0, 0), 0); }), ErrorKind::InvalidCircle);
  EXPECT_EQ(kind_of([] { (void)Circle(pt(0, 0), -1); }), ErrorKind::InvalidCircle);
}

TEST(ParamPoint, Examples) {
  EXPECT_EQ(param_point(k1, Rational(0)), pt(1, 0));
  EXPECT_EQ(param_point(k1, ExtendedScalar::infinity()), pt(-5, 0));
  EXPECT_EQ(param_point(k1, Rational(1)), pt(-2, 3));
}

TEST(SecondIntersection, Examples) {
  EXPECT_EQ(second_intersection(k1, pt(1, 0), pt(2, 1)), pt(-2, -3));
  EXPECT_EQ(second_intersection(k2, pt(0, 0), pt(2, 1)), pt(Rational(16, 5), Rational(8, 5)));
  EXPECT_EQ(second_intersection(k2, pt(0, 0), pt(0, 5)), pt(0, 0));
}

TEST(SecondIntersection, Errors) {
  EXPECT_EQ(kind_of([] { (void)second_intersection(k1, pt(0, 0), pt(2, 1)); }), ErrorKind::PointNotOnCircle);
  EXPECT_EQ(kind_of([] { (void)second_intersection(k1, pt(1, 0), pt(1, 0)); }), ErrorKind::IdenticalPoints);
}

TEST(SecondIntersection, MatchesChordMidpointOracle) {
  for (const Point2& p : {pt(2, 1), pt(-7, 4), pt(Rational(1, 3), Rational(-5, 2)), pt(0, 0)}) {
    EXPECT_EQ(second_intersection(k1, pt(1, 0), p), oracle::chord_reflection(k1, pt(1, 0), p));
  }
}

TEST(TangentAt, Examples) {
  EXPECT_EQ(tangent_at(k1, pt(-5, 0)), Line::vertical(-5));
  EXPECT_EQ(tangent_at(k2, pt(4, 0)), Line::vertical(4));
  EXPECT_EQ(tangent_at(k1, pt(-2, 3)), Line::horizontal(3));
  EXPECT_EQ(kind_of([] { (void)tangent_at(k1, pt(0, 0)); }), ErrorKind::PointNotOnCircle);
}

TEST(RadicalAxis, Examples) {
  EXPECT_EQ(radical_axis(k1, k2), Line::vertical(Rational(5, 8)));
  EXPECT_EQ(radical_axis(Circle(pt(-3, 0), 2), Circle(pt(3, 0), 2)), Line::vertical(0));
  EXPECT_EQ(radical_axis(Circle(pt(0, 0), 1), Circle(pt(4, 0), 1)), Line::vertical(2));
  EXPECT_EQ(kind_of([] { (void)radical_axis(Circle(pt(1, 1), 1), Circle(pt(1, 1), 2)); }),
            ErrorKind::ConcentricCircles);
}

TEST(RadicalAxis, EqualPowerOracleAtTwoPoints) {
  const Line axis = radical_axis(k1, k2);
  for (const Point2& s : {pt(Rational(5, 8), 0), pt(Rational(5, 8), 11)}) {
    ASSERT_TRUE(axis.contains(s));
    EXPECT_EQ(oracle::expanded_power(-2, 0, 3, s), oracle::expanded_power(2, 0, 2, s));
  }
}

TEST(PowerOfPoint, Examples) {
  EXPECT_EQ(power_of_point(Circle(pt(0, 0), 1), pt(0, 0)), Rational(-1));
  EXPECT_EQ(power_of_point(Circle(pt(0, 0), 1), pt(2, 0)), Rational(3));
  // (21/8)^2 - 9 = (-11/8)^2 - 4 = -135/64.
  const Point2 z = pt(Rational(5, 8), 0);
  EXPECT_EQ(power_of_point(k1, z), Rational(-135, 64));
  EXPECT_EQ(power_of_point(k1, z), power_of_point(k2, z));
  EXPECT_EQ(power_of_point(k1, z), oracle::expanded_power(-2, 0, 3, z));
}
