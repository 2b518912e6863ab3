#include "imogeo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imogeo/error.hpp"
#include "imogeo/figures.hpp"
#include "imogeo/fuzz.hpp"

namespace imogeo::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RawArgs {
  std::string a, r1, r2, scenario, p, q, q_samples, out;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  int width = 800;
  int height = 600;
  bool no_radical_axis = false;
  bool no_labels = false;
};

Rational parse_arg(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const GeometryError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

ScenarioConfig scenario_from(const RawArgs& raw) {
  const bool has_flags = !raw.a.empty() || !raw.r1.empty() || !raw.r2.empty();
  if (!raw.scenario.empty()) {
    if (has_flags) throw UsageError("give either --scenario or --a/--r1/--r2, not both");
    try {
      return parse_scenario(raw.scenario);
    } catch (const GeometryError& e) {
      throw UsageError(std::string("--scenario: ") + e.what());
    }
  }
  if (raw.a.empty() || raw.r1.empty() || raw.r2.empty()) {
    throw UsageError("scenario required: --a, --r1 and --r2 (or --scenario)");
  }
  return ScenarioConfig{parse_arg("a", raw.a), parse_arg("r1", raw.r1), parse_arg("r2", raw.r2)};
}

ProbePoint probe_from(const RawArgs& raw) {
  if (raw.p.empty() || raw.q.empty()) throw UsageError("probe required: --p and --q");
  return ProbePoint{parse_arg("p", raw.p), parse_arg("q", raw.q)};
}

std::vector<Rational> samples_from(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(parse_arg("q-samples", item));
  return out;
}

Json point_json(const Point2& p) { return Json::array({p.x.to_string(), p.y.to_string()}); }

Json line_json(const Line& l) {
  return Json::array({l.alpha().to_string(), l.beta().to_string(), l.gamma().to_string()});
}

Json extended_json(const ExtendedPoint& p) {
  Json out = Json::object();
  if (p.is_finite()) {
    out["finite"] = point_json(p.point());
  } else {
    out["atInfinity"] = Json::array({p.direction().dx().to_string(), p.direction().dy().to_string()});
  }
  return out;
}

Json scenario_json(const ScenarioConfig& cfg) {
  return Json{{"a", cfg.a.to_string()},
              {"r1", cfg.r1.to_string()},
              {"r2", cfg.r2.to_string()},
              {"ordering", std::string(ordering_name(validate(cfg)))}};
}

Json probe_json(const ProbePoint& probe) { return Json{{"p", probe.p.to_string()}, {"q", probe.q.to_string()}}; }

Json flags_json(const CaseClassification& classification) {
  Json out = Json::array();
  for (auto name : classification.names()) out.push_back(std::string(name));
  return out;
}

Json header(const char* command, const ScenarioConfig& cfg) {
  return Json{{"command", command}, {"scenario", scenario_json(cfg)}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

CliOutcome run_compute(const CliRequest& req) {
  const DerivedScene scene = derive(req.scenario);
  const ProbePoint& probe = *req.probe;
  const ImageResult image = construct_image_geometric(scene, probe);
  const ExtendedPoint closed = image_closed_form(req.scenario, probe);

  Json doc = header("compute", req.scenario);
  doc["probe"] = probe_json(probe);
  doc["points"] = Json{{"A", point_json(scene.A)}, {"B", point_json(scene.B)}, {"C", point_json(scene.C)},
                       {"D", point_json(scene.D)}};
  doc["M"] = point_json(image.M);
  doc["N"] = point_json(image.N);
  doc["lineAM"] = line_json(image.lineAM);
  doc["lineDN"] = line_json(image.lineDN);
  doc["Pprime"] = extended_json(image.Pprime);
  doc["closedForm"] = extended_json(closed);
  doc["oracleAgreement"] = image.Pprime == closed;
  doc["classification"] = flags_json(image.classification);

  CliOutcome outcome{.stdout_text = dump(doc)};
  if (!(image.Pprime == closed)) {
    outcome.exit_code = kExitDomainError;
    outcome.stderr_text = "error: OracleMismatch: synthetic and closed-form images differ\n";
  }
  return outcome;
}

CliOutcome run_locus(const CliRequest& req) {
  const ExtendedScalar image_x = locus_x(req.scenario, *req.p);
  Json doc = header("locus", req.scenario);
  doc["p"] = req.p->to_string();
  doc["pPrime"] = image_x.to_string();
  doc["fixedPoint"] = image_x.is_finite() && image_x.value() == *req.p;
  return CliOutcome{.stdout_text = dump(doc)};
}

CliOutcome run_classify(const CliRequest& req) {
  Json doc = header("classify", req.scenario);
  doc["probe"] = probe_json(*req.probe);
  doc["flags"] = flags_json(classify_case(req.scenario, *req.probe));
  return CliOutcome{.stdout_text = dump(doc)};
}

CliOutcome run_verify(const CliRequest& req) {
  static const std::vector<Rational> kDefaultSamples = {Rational(1), Rational(2), Rational(-3), Rational(1, 7)};
  const std::vector<Rational>& samples = req.q_samples.empty() ? kDefaultSamples : req.q_samples;
  const auto results = concurrency_samples(req.scenario, samples);

  Json doc = header("verify", req.scenario);
  doc["radicalAxisX"] = radical_axis_abscissa(req.scenario).to_string();
  Json qs = Json::array();
  for (const auto& q : samples) qs.push_back(q.to_string());
  doc["qSamples"] = qs;
  Json rows = Json::array();
  bool pass = true;
  for (const auto& r : results) {
    rows.push_back(Json{{"q", r.q.to_string()}, {"Pprime", extended_json(r.Pprime)}, {"concurrent", r.concurrent}});
    pass = pass && r.concurrent;
  }
  doc["samples"] = rows;
  doc["pass"] = pass;

  CliOutcome outcome{.stdout_text = dump(doc)};
  if (!pass) {
    outcome.exit_code = kExitDomainError;
    outcome.stderr_text = "error: ConcurrencyFailure: AM, DN and the radical axis do not concur\n";
  }
  return outcome;
}

CliOutcome run_fuzz(const CliRequest& req) {
  const FuzzReport report = run_oracle_fuzz(req.seed, req.trials, req.threads);
  Json doc = Json{{"command", "fuzz"}, {"seed", report.seed}, {"trials", report.trials},
                  {"failures", report.failures()}, {"failedTrials", report.failed_trials}};
  Json counts = Json::object();
  for (const auto& [name, count] : report.case_counts) counts[name] = count;
  doc["caseCounts"] = counts;
  doc["pass"] = report.passed();

  CliOutcome outcome{.stdout_text = dump(doc)};
  if (!report.passed()) {
    outcome.exit_code = kExitDomainError;
    outcome.stderr_text = "error: OracleMismatch: " + std::to_string(report.failures()) + " failing trials\n";
  }
  return outcome;
}

CliOutcome run_render(const CliRequest& req) {
  RenderSpec spec = make_render_spec(req.scenario, req.probe);
  spec.width = req.width;
  spec.height = req.height;
  spec.show_radical_axis = req.radical_axis;
  spec.labels = req.labels;
  std::string svg;
  try {
    svg = render_svg(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (!req.out) return CliOutcome{.stdout_text = svg};

  std::ofstream file(*req.out, std::ios::binary);
  file << svg;
  file.close();
  if (!file) {
    return CliOutcome{.exit_code = kExitDomainError, .stderr_text = "error: IOError: cannot write " + *req.out + "\n"};
  }
  Json doc = header("render", req.scenario);
  doc["probe"] = probe_json(*req.probe);
  doc["out"] = *req.out;
  doc["bytes"] = svg.size();
  doc["Pprime"] = extended_json(spec.result->Pprime);
  return CliOutcome{.stdout_text = dump(doc)};
}

}  // namespace

CliRequest parse_args(const std::vector<std::string>& args, std::string* help_text) {
  CLI::App app{"Exact two-circle construction: images of probe points, their locus, and checks"};
  app.name("imogeo");
  app.require_subcommand(1);

  RawArgs raw;
  auto add_scenario = [&raw](CLI::App* sub) {
    sub->add_option("--a", raw.a, "half the distance between the centers");
    sub->add_option("--r1", raw.r1, "radius of the circle centered at (-a, 0)");
    sub->add_option("--r2", raw.r2, "radius of the circle centered at (a, 0)");
    sub->add_option("--scenario", raw.scenario, "\"a r1 r2\" or a JSON object with keys a, r1, r2");
  };
  auto add_probe = [&raw](CLI::App* sub) {
    sub->add_option("--p", raw.p, "probe abscissa");
    sub->add_option("--q", raw.q, "probe ordinate");
  };

  CLI::App* compute = app.add_subcommand("compute", "construct M, N and the image P'");
  add_scenario(compute);
  add_probe(compute);

  CLI::App* locus = app.add_subcommand("locus", "abscissa p' of the image line for probe line x = p");
  add_scenario(locus);
  locus->add_option("--p", raw.p, "probe line abscissa");

  CLI::App* classify = app.add_subcommand("classify", "degenerate-case flags for a probe");
  add_scenario(classify);
  add_probe(classify);

  CLI::App* verify = app.add_subcommand("verify", "check AM, DN and the radical axis concur");
  add_scenario(verify);
  verify->add_option("--q-samples", raw.q_samples, "comma-separated probe ordinates (default 1,2,-3,1/7)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "seeded oracle-equivalence trials");
  fuzz->add_option("--trials", raw.trials, "number of trials")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", raw.seed, "base seed");
  fuzz->add_option("--threads", raw.threads, "worker threads (0 = hardware)");

  CLI::App* render = app.add_subcommand("render", "write an SVG figure");
  add_scenario(render);
  add_probe(render);
  render->add_option("--out", raw.out, "output path (stdout if omitted)");
  render->add_option("--width", raw.width, "pixels")->check(CLI::Range(64, 100000));
  render->add_option("--height", raw.height, "pixels")->check(CLI::Range(64, 100000));
  render->add_flag("--no-radical-axis", raw.no_radical_axis, "omit the dashed radical axis");
  render->add_flag("--no-labels", raw.no_labels, "omit point labels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help_text != nullptr) {
      const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      *help_text = target->help();
    }
    return {};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliRequest req;
  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen == fuzz) {
    req.command = Command::Fuzz;
    req.trials = raw.trials;
    req.seed = raw.seed;
    req.threads = raw.threads;
    return req;
  }

  req.scenario = scenario_from(raw);
  if (chosen == compute || chosen == classify || chosen == render) {
    req.probe = probe_from(raw);
    req.command = chosen == compute ? Command::Compute : chosen == classify ? Command::Classify : Command::Render;
  } else if (chosen == locus) {
    if (raw.p.empty()) throw UsageError("locus needs --p");
    req.command = Command::Locus;
    req.p = parse_arg("p", raw.p);
  } else {
    req.command = Command::Verify;
    if (!raw.q_samples.empty()) req.q_samples = samples_from(raw.q_samples);
  }
  if (!raw.out.empty()) req.out = raw.out;
  req.width = raw.width;
  req.height = raw.height;
  req.radical_axis = !raw.no_radical_axis;
  req.labels = !raw.no_labels;
  return req;
}

CliOutcome run(const CliRequest& request) {
  try {
    switch (request.command) {
      case Command::Compute: return run_compute(request);
      case Command::Locus: return run_locus(request);
      case Command::Classify: return run_classify(request);
      case Command::Verify: return run_verify(request);
      case Command::Fuzz: return run_fuzz(request);
      case Command::Render: return run_render(request);
    }
  } catch (const GeometryError& e) {
    return CliOutcome{.exit_code = kExitDomainError, .stderr_text = std::string("error: ") + e.what() + "\n"};
  } catch (const UsageError& e) {
    return CliOutcome{.exit_code = kExitUsage, .stderr_text = std::string("usage error: ") + e.what() + "\n"};
  }
  return CliOutcome{.exit_code = kExitUsage, .stderr_text = "usage error: unknown command\n"};
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliRequest request;
  try {
    std::string help;
    request = parse_args(args, &help);
    if (!help.empty()) {
      out << help;
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  const CliOutcome outcome = run(request);
  out << outcome.stdout_text;
  err << outcome.stderr_text;
  return outcome.exit_code;
}

}  // namespace imogeo::cli
