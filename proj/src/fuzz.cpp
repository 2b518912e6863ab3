#include "imogeo/fuzz.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "imogeo/error.hpp"

namespace imogeo {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffU); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32U); };
  return std::seed_seq{lo(seed), hi(seed), lo(index), hi(index)};
}

bool scenario_matches(Ordering ordering, ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Any: return true;
    case ScenarioKind::Intersecting: return ordering == Ordering::Intersecting_ABCD;
    case ScenarioKind::NonTangent: return ordering != Ordering::ExternallyTangent;
    case ScenarioKind::Tangent: return ordering == Ordering::ExternallyTangent;
  }
  return false;
}

bool is_degenerate(const DerivedScene& scene, const ProbePoint& probe) {
  const Point2 p = probe.point();
  return p == scene.B || p == scene.C;
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t index) {
  auto seq = make_seed_seq(seed, index);
  engine_.seed(seq);
}

std::int64_t TrialRng::uniform(std::int64_t lo, std::int64_t hi) {
  // Rejection sampling keeps the draw unbiased and independent of the
  // standard library's distribution implementation.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational TrialRng::rational(std::int64_t num_lo, std::int64_t num_hi) {
  const std::int64_t num = uniform(num_lo, num_hi);
  const std::int64_t den = uniform(1, 20);
  return Rational(num, den);
}

Rational TrialRng::nonzero_rational() {
  Rational value = rational();
  while (value.is_zero()) value = rational();
  return value;
}

ScenarioConfig random_scenario(TrialRng& rng, ScenarioKind kind) {
  for (;;) {
    ScenarioConfig cfg;
    if (kind == ScenarioKind::Tangent) {
      cfg.a = rng.positive_rational();
      cfg.r1 = rng.positive_rational();
      cfg.r2 = Rational(2) * cfg.a - cfg.r1;
    } else {
      cfg = ScenarioConfig{rng.positive_rational(), rng.positive_rational(), rng.positive_rational()};
    }
    try {
      if (scenario_matches(validate(cfg), kind)) return cfg;
    } catch (const GeometryError&) {
      // inadmissible draw; resample
    }
  }
}

ProbePoint random_probe(TrialRng& rng, const DerivedScene& scene) {
  for (;;) {
    ProbePoint probe{rng.rational(), rng.rational()};
    if (!is_degenerate(scene, probe)) return probe;
  }
}

ProbePoint random_offaxis_probe(TrialRng& rng, const DerivedScene& scene) {
  for (;;) {
    ProbePoint probe{rng.rational(), rng.nonzero_rational()};
    if (!is_degenerate(scene, probe)) return probe;
  }
}

FuzzTrial make_fuzz_trial(std::uint64_t seed, std::uint64_t index) {
  TrialRng rng(seed, index);
  const std::int64_t kind = rng.uniform(0, 9);

  const ScenarioConfig cfg = random_scenario(rng, kind == 9 ? ScenarioKind::Tangent : ScenarioKind::Any);
  const DerivedScene scene = derive(cfg);
  ProbePoint probe = random_probe(rng, scene);
  switch (kind) {
    case 5: probe.q = 0; break;
    case 6: probe.p = scene.B.x; break;
    case 7: probe.p = scene.C.x; break;
    case 8: probe.p = scene.radical_axis_x; break;
    default: break;
  }
  // Steering can land on B or C; fall back to an off-axis probe there.
  if (is_degenerate(scene, probe)) probe.q = rng.nonzero_rational();
  return FuzzTrial{cfg, probe};
}

bool check_trial(const FuzzTrial& trial) {
  try {
    const DerivedScene scene = derive(trial.config);
    const ImageResult geometric = construct_image_geometric(scene, trial.probe);
    const ExtendedPoint closed = image_closed_form(trial.config, trial.probe);
    if (!(geometric.Pprime == closed)) return false;

    const Point2 p = trial.probe.point();
    if (!circle_contains(scene.k1, geometric.M) || !circle_contains(scene.k2, geometric.N)) return false;
    if (!collinear_det(p, scene.C, geometric.M).is_zero()) return false;
    if (!collinear_det(p, scene.B, geometric.N).is_zero()) return false;
    if (closed.is_finite()) {
      const Point2& image = closed.point();
      if (!geometric.lineAM.contains(image) || !geometric.lineDN.contains(image)) return false;
      if (!collinear_det(image, scene.A, geometric.M).is_zero()) return false;
      if (!collinear_det(image, scene.D, geometric.N).is_zero()) return false;
      const ExtendedScalar x = locus_x(trial.config, trial.probe.p);
      if (x.is_infinite() || x.value() != image.x) return false;
    }
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

FuzzReport run_oracle_fuzz(std::uint64_t seed, std::uint64_t trials, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));

  std::vector<char> passed(trials, 0);
  std::vector<CaseClassification> classes(trials);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::uint64_t i = w; i < trials; i += threads) {
          const FuzzTrial trial = make_fuzz_trial(seed, i);
          classes[i] = classify_case(trial.config, trial.probe);
          passed[i] = check_trial(trial) ? 1 : 0;
        }
      });
    }
  }

  FuzzReport report;
  report.seed = seed;
  report.trials = trials;
  for (CaseFlag flag : {CaseFlag::Generic, CaseFlag::ProbeOnAxis, CaseFlag::CollapsesToA, CaseFlag::CollapsesToD,
                        CaseFlag::TouchingCircles, CaseFlag::OnRadicalAxis}) {
    report.case_counts[std::string(case_flag_name(flag))] = 0;
  }
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (passed[i] == 0) report.failed_trials.push_back(i);
    for (auto name : classes[i].names()) ++report.case_counts[std::string(name)];
  }
  return report;
}

}  // namespace imogeo
