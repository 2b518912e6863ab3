#include <gtest/gtest.h>

#include <vector>

#include "imogeo/construction.hpp"
#include "imogeo/error.hpp"

using namespace imogeo;

namespace {

const ScenarioConfig kWorked{2, 3, 2};
const ScenarioConfig kTouching{2, 2, 2};
const ScenarioConfig kDisjoint{5, 2, 2};

ProbePoint probe(Rational p, Rational q) { return ProbePoint{std::move(p), std::move(q)}; }
Point2 pt(Rational x, Rational y) { return Point2{std::move(x), std::move(y)}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::ParseError;
}

CaseClassification flags(std::initializer_list<CaseFlag> list) {
  CaseClassification out;
  for (CaseFlag f : list) out.set(f);
  return out;
}

}  // namespace

TEST(ConstructM, Examples) {
  const DerivedScene s = derive(kWorked);
  EXPECT_EQ(construct_M(s, probe(2, 1)), pt(-2, -3));
  EXPECT_EQ(construct_M(s, probe(3, 0)), s.A);
  EXPECT_EQ(construct_M(s, probe(1, 5)), s.C);
  EXPECT_EQ(kind_of([&] { (void)construct_M(s, probe(1, 0)); }), ErrorKind::DegenerateProbe);
}

TEST(ConstructN, Examples) {
  const DerivedScene s = derive(kWorked);
  EXPECT_EQ(construct_N(s, probe(2, 1)), pt(Rational(16, 5), Rational(8, 5)));
  EXPECT_EQ(construct_N(s, probe(3, 0)), s.D);
  EXPECT_EQ(construct_N(s, probe(0, 7)), s.B);
  EXPECT_EQ(kind_of([&] { (void)construct_N(s, probe(0, 0)); }), ErrorKind::DegenerateProbe);
}

TEST(ImageGeometric, WorkedCase) {
  const ImageResult r = construct_image_geometric(derive(kWorked), probe(2, 1));
  EXPECT_EQ(r.M, pt(-2, -3));
  EXPECT_EQ(r.N, pt(Rational(16, 5), Rational(8, 5)));
  EXPECT_EQ(r.lineAM, Line(1, 1, 5));
  EXPECT_EQ(r.lineDN, Line(2, 1, -8));
  EXPECT_EQ(r.Pprime, ExtendedPoint(pt(13, -18)));
  EXPECT_TRUE(r.classification.is_generic());
}

TEST(ImageGeometric, ProbeOnAxisUsesVerticalTangents) {
  const DerivedScene s = derive(kWorked);
  const ImageResult r = construct_image_geometric(s, probe(3, 0));
  EXPECT_EQ(r.lineAM, Line::vertical(-5));
  EXPECT_EQ(r.lineDN, Line::vertical(4));
  EXPECT_EQ(r.Pprime, ExtendedPoint::at_infinity(0, 1));
}

TEST(ImageGeometric, TouchingCirclesGiveParallels) {
  const ImageResult r = construct_image_geometric(derive(kTouching), probe(1, 1));
  EXPECT_TRUE(r.Pprime.is_at_infinity());
  EXPECT_TRUE(r.lineAM.is_parallel_to(r.lineDN));
  // AM is perpendicular to the chord through C = B = (0, 0) and P = (1, 1).
  EXPECT_EQ(r.Pprime, ExtendedPoint::at_infinity(-1, 1));
}

TEST(ImageGeometric, TouchingCirclesProbeOnCommonTangent) {
  // CP and BP are both the common tangent x = 0, so AM = DN = the center line.
  const ImageResult r = construct_image_geometric(derive(kTouching), probe(0, 3));
  EXPECT_EQ(r.M, pt(0, 0));
  EXPECT_EQ(r.N, pt(0, 0));
  EXPECT_EQ(r.lineAM, r.lineDN);
  EXPECT_EQ(r.Pprime, ExtendedPoint::at_infinity(1, 0));
  EXPECT_EQ(image_closed_form(kTouching, probe(0, 3)), r.Pprime);
}

TEST(ImageGeometric, MEqualsCGivesD) {
  // CP tangent at C: AM is the center line and the image collapses to D.
  const DerivedScene s = derive(kWorked);
  const ImageResult r = construct_image_geometric(s, probe(1, 5));
  EXPECT_EQ(r.M, s.C);
  EXPECT_EQ(r.lineAM, s.axis);
  EXPECT_EQ(r.Pprime, ExtendedPoint(s.D));
  EXPECT_EQ(image_closed_form(kWorked, probe(1, 5)), ExtendedPoint(s.D));
}

TEST(ImageGeometric, RejectsProbeAtBOrC) {
  const DerivedScene s = derive(kWorked);
  EXPECT_EQ(kind_of([&] { (void)construct_image_geometric(s, probe(0, 0)); }), ErrorKind::DegenerateProbe);
  EXPECT_EQ(kind_of([&] { (void)construct_image_geometric(s, probe(1, 0)); }), ErrorKind::DegenerateProbe);
}

TEST(ImageClosedForm, Examples) {
  EXPECT_EQ(image_closed_form(kWorked, probe(2, 1)), ExtendedPoint(pt(13, -18)));
  for (const Rational& q : {Rational(1), Rational(-4), Rational(2, 9)}) {
    EXPECT_EQ(image_closed_form(kWorked, probe(0, q)), ExtendedPoint(pt(-5, 0)));
    EXPECT_EQ(image_closed_form(kWorked, probe(1, q)), ExtendedPoint(pt(4, 0)));
  }
  EXPECT_EQ(image_closed_form(kWorked, probe(3, 0)), ExtendedPoint::at_infinity(0, 1));
  EXPECT_EQ(kind_of([] { (void)image_closed_form(kWorked, probe(1, 0)); }), ErrorKind::DegenerateProbe);
  EXPECT_EQ(kind_of([] { (void)image_closed_form(ScenarioConfig{1, 5, 1}, probe(1, 1)); }),
            ErrorKind::InvalidScenario);
}

TEST(LocusX, Examples) {
  EXPECT_EQ(locus_x(kWorked, 2), ExtendedScalar(Rational(13)));
  EXPECT_EQ(locus_x(kWorked, Rational(5, 8)), ExtendedScalar(Rational(5, 8)));
  EXPECT_TRUE(locus_x(kTouching, 0).is_infinite());
  EXPECT_TRUE(locus_x(kTouching, Rational(-17, 3)).is_infinite());
}

TEST(ClassifyCase, Examples) {
  EXPECT_EQ(classify_case(kWorked, probe(Rational(5, 8), 3)), flags({CaseFlag::OnRadicalAxis}));
  EXPECT_EQ(classify_case(kWorked, probe(7, 0)), flags({CaseFlag::ProbeOnAxis}));
  EXPECT_EQ(classify_case(kTouching, probe(0, 0)),
            flags({CaseFlag::TouchingCircles, CaseFlag::ProbeOnAxis, CaseFlag::OnRadicalAxis, CaseFlag::CollapsesToA,
                   CaseFlag::CollapsesToD}));
  EXPECT_TRUE(classify_case(kWorked, probe(2, 1)).is_generic());
  EXPECT_TRUE(classify_case(kWorked, probe(2, 1)).has(CaseFlag::Generic));
}

TEST(ClassifyCase, NamesInDeclarationOrder) {
  const auto names = classify_case(kTouching, probe(0, 0)).names();
  const std::vector<std::string_view> expected = {"ProbeOnAxis", "CollapsesToA", "CollapsesToD", "TouchingCircles",
                                                  "OnRadicalAxis"};
  EXPECT_EQ(names, expected);
  EXPECT_EQ(CaseClassification().names(), std::vector<std::string_view>{"Generic"});
}

TEST(TangentHalfParams, Examples) {
  const HalfAngleParams worked = tangent_half_params(kWorked, probe(2, 1));
  EXPECT_EQ(worked.u, ExtendedScalar(Rational(-1)));
  EXPECT_EQ(worked.v, ExtendedScalar(Rational(1, 2)));
  EXPECT_EQ(param_point(derive(kWorked).k1, worked.u), pt(-2, -3));

  const HalfAngleParams on_axis = tangent_half_params(kWorked, probe(3, 0));
  EXPECT_TRUE(on_axis.u.is_infinite());
  EXPECT_EQ(on_axis.v, ExtendedScalar(Rational(0)));

  const HalfAngleParams tangent_c = tangent_half_params(kWorked, probe(1, 2));
  EXPECT_EQ(tangent_c.u, ExtendedScalar(Rational(0)));
  EXPECT_EQ(param_point(derive(kWorked).k1, tangent_c.u), derive(kWorked).C);

  const HalfAngleParams tangent_b = tangent_half_params(kWorked, probe(0, 2));
  EXPECT_TRUE(tangent_b.v.is_infinite());
  EXPECT_EQ(param_point(derive(kWorked).k2, tangent_b.v), derive(kWorked).B);
}

TEST(TangentHalfParams, IndeterminateAtBAndC) {
  EXPECT_EQ(kind_of([] { (void)tangent_half_params(kWorked, probe(1, 0)); }), ErrorKind::IndeterminateParam);
  EXPECT_EQ(kind_of([] { (void)tangent_half_params(kWorked, probe(0, 0)); }), ErrorKind::IndeterminateParam);
}

TEST(VerifyConcurrency, Examples) {
  const std::vector<Rational> samples = {1, 2, -3, Rational(1, 7)};
  EXPECT_TRUE(verify_concurrency(kWorked, samples));
  EXPECT_EQ(kind_of([&] { (void)verify_concurrency(kDisjoint, samples); }), ErrorKind::WrongOrdering);
  EXPECT_EQ(kind_of([&] { (void)verify_concurrency(kTouching, samples); }), ErrorKind::WrongOrdering);
  EXPECT_TRUE(verify_concurrency(kWorked, std::vector<Rational>{}));
}

TEST(VerifyConcurrency, SampleDetailAndZeroSample) {
  const std::vector<Rational> samples = {1};
  const auto rows = concurrency_samples(kWorked, samples);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_TRUE(rows[0].concurrent);
  ASSERT_TRUE(rows[0].Pprime.is_finite());
  EXPECT_EQ(rows[0].Pprime.point().x, Rational(5, 8));
  const std::vector<Rational> zero = {0};
  EXPECT_EQ(kind_of([&] { (void)concurrency_samples(kWorked, zero); }), ErrorKind::DegenerateProbe);
}
