#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "imogeo/construction.hpp"
#include "imogeo/scenario.hpp"

namespace imogeo {

inline constexpr std::uint64_t kDefaultSeed = 360;
inline constexpr std::uint64_t kDefaultTrials = 1000;

/// Deterministic random stream for one trial, derived from (seed, index) so
/// trials can run in any order or concurrently and still reproduce.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t index);

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// numerator in [num_lo, num_hi], denominator in [1, 20].
  Rational rational(std::int64_t num_lo = -50, std::int64_t num_hi = 50);
  Rational positive_rational() { return rational(1, 50); }
  Rational nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

enum class ScenarioKind {
  Any,             // every admissible ordering
  Intersecting,    // |r1 - r2| < 2a < r1 + r2
  NonTangent,      // intersecting or disjoint
  Tangent,         // r1 + r2 = 2a
};

/// Rejection-samples (a, r1, r2) until the scenario is valid and of `kind`.
ScenarioConfig random_scenario(TrialRng& rng, ScenarioKind kind = ScenarioKind::Any);

/// Random probe with p, q drawn from the trial range, never equal to B or C.
ProbePoint random_probe(TrialRng& rng, const DerivedScene& scene);

/// Same, with q forced nonzero.
ProbePoint random_offaxis_probe(TrialRng& rng, const DerivedScene& scene);

struct FuzzTrial {
  ScenarioConfig config;
  ProbePoint probe;
};

/// The (scenario, probe) pair for trial `index`. Most trials are uniform;
/// the rest are steered onto the special cases (probe on the axis, probe
/// line through B, C or the radical axis, touching circles).
FuzzTrial make_fuzz_trial(std::uint64_t seed, std::uint64_t index);

struct FuzzReport {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> failed_trials;
  /// Per-flag counts over all trials, keyed by flag name.
  std::map<std::string, std::uint64_t> case_counts;

  std::uint64_t failures() const { return failed_trials.size(); }
  bool passed() const { return failed_trials.empty(); }
};

/// Checks one trial: oracle equivalence plus the on-circle and collinearity
/// witnesses. Returns false on any mismatch or unexpected error.
bool check_trial(const FuzzTrial& trial);

/// Runs `trials` oracle-equivalence trials. `threads` = 0 picks the
/// hardware concurrency; the report does not depend on it.
FuzzReport run_oracle_fuzz(std::uint64_t seed, std::uint64_t trials, unsigned threads = 0);

}  // namespace imogeo
