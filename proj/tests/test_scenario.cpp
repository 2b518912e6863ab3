#include <gtest/gtest.h>

#include "imogeo/error.hpp"
#include "imogeo/scenario.hpp"

using namespace imogeo;

namespace {

ScenarioConfig cfg(Rational a, Rational r1, Rational r2) { return {std::move(a), std::move(r1), std::move(r2)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Validate, Orderings) {
  EXPECT_EQ(validate(cfg(2, 3, 2)), Ordering::Intersecting_ABCD);
  EXPECT_EQ(validate(cfg(5, 2, 2)), Ordering::Disjoint_ACBD);
  EXPECT_EQ(validate(cfg(2, 2, 2)), Ordering::ExternallyTangent);
}

TEST(Validate, Rejections) {
  EXPECT_EQ(kind_of([] { validate(cfg(0, 1, 1)); }), ErrorKind::InvalidScenario);
  EXPECT_EQ(kind_of([] { validate(cfg(1, -1, 1)); }), ErrorKind::InvalidScenario);
  EXPECT_EQ(kind_of([] { validate(cfg(1, 1, 0)); }), ErrorKind::InvalidScenario);
  // containment, and internal tangency at 2a = |r1 - r2|
  EXPECT_EQ(kind_of([] { validate(cfg(1, 5, 1)); }), ErrorKind::InvalidScenario);
  EXPECT_EQ(kind_of([] { validate(cfg(1, 3, 1)); }), ErrorKind::InvalidScenario);
}

TEST(Derive, WorkedCase) {
  const DerivedScene s = derive(cfg(2, 3, 2));
  EXPECT_EQ(s.A, (Point2{-5, 0}));
  EXPECT_EQ(s.B, (Point2{0, 0}));
  EXPECT_EQ(s.C, (Point2{1, 0}));
  EXPECT_EQ(s.D, (Point2{4, 0}));
  EXPECT_EQ(s.radical_axis_x, Rational(5, 8));
  EXPECT_EQ(s.Z, (Point2{Rational(5, 8), 0}));
  EXPECT_EQ(s.axis, Line::horizontal(0));
  EXPECT_EQ(radical_axis(s.k1, s.k2), Line::vertical(s.radical_axis_x));
  EXPECT_EQ(power_of_point(s.k1, s.Z), power_of_point(s.k2, s.Z));
}

TEST(Derive, TangentKeepsBEqualC) {
  const DerivedScene s = derive(cfg(1, 1, 1));
  EXPECT_EQ(s.ordering, Ordering::ExternallyTangent);
  EXPECT_EQ(s.A, (Point2{-2, 0}));
  EXPECT_EQ(s.B, (Point2{0, 0}));
  EXPECT_EQ(s.C, s.B);
  EXPECT_EQ(s.D, (Point2{2, 0}));
}

TEST(Derive, SymmetricDisjoint) {
  const DerivedScene s = derive(cfg(5, 2, 2));
  EXPECT_EQ(s.A, (Point2{-7, 0}));
  EXPECT_EQ(s.C, (Point2{-3, 0}));
  EXPECT_EQ(s.B, (Point2{3, 0}));
  EXPECT_EQ(s.D, (Point2{7, 0}));
  EXPECT_EQ(s.radical_axis_x, Rational(0));
}

TEST(Derive, PropagatesInvalidScenario) {
  EXPECT_EQ(kind_of([] { (void)derive(cfg(1, 5, 1)); }), ErrorKind::InvalidScenario);
}

TEST(ProbeLine, Examples) {
  EXPECT_EQ(probe_line(cfg(2, 3, 2), Rational(5, 8)), Line::vertical(Rational(5, 8)));
  EXPECT_EQ(probe_line(cfg(2, 3, 2), 0), Line(1, 0, 0));
  const Line through_a = probe_line(cfg(2, 3, 2), -5);
  EXPECT_TRUE(through_a.contains(derive(cfg(2, 3, 2)).A));
}

TEST(ParseScenario, TextAndJson) {
  EXPECT_EQ(parse_scenario("2 3 2"), cfg(2, 3, 2));
  EXPECT_EQ(parse_scenario("  1/2\t0.75   1 "), cfg(Rational(1, 2), Rational(3, 4), 1));
  EXPECT_EQ(parse_scenario(R"({"a": "2", "r1": "3", "r2": "5/2"})"), cfg(2, 3, Rational(5, 2)));
}

TEST(ParseScenario, Errors) {
  EXPECT_EQ(kind_of([] { (void)parse_scenario("2 3"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { (void)parse_scenario("2 3 x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { (void)parse_scenario(R"({"a": 2, "r1": "3", "r2": "2"})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { (void)parse_scenario(R"({"a": "2", "r1": "3")"); }), ErrorKind::ParseError);
}
