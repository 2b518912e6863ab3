#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "imogeo/construction.hpp"
#include "imogeo/scenario.hpp"

namespace imogeo::cli {

enum class Command { Compute, Locus, Classify, Verify, Fuzz, Render };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct CliRequest {
  Command command = Command::Compute;
  ScenarioConfig scenario;
  std::optional<ProbePoint> probe;
  std::optional<Rational> p;
  std::vector<Rational> q_samples;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 360;
  unsigned threads = 0;
  std::optional<std::string> out;
  int width = 800;
  int height = 600;
  bool radical_axis = true;
  bool labels = true;
};

/// Missing or malformed arguments; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliOutcome {
  int exit_code = kExitOk;
  /// JSON report (or SVG text for render without --out).
  std::string stdout_text;
  std::string stderr_text;
};

/// Parses argv-style arguments, program name excluded. Throws UsageError.
/// Help requests are reported through `help_text` with no request built.
CliRequest parse_args(const std::vector<std::string>& args, std::string* help_text = nullptr);

/// Executes a parsed request. Domain errors become exit status 1 with the
/// error name on the diagnostic stream.
CliOutcome run(const CliRequest& request);

/// Full front end: parse, run, print. Returns the process exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imogeo::cli
