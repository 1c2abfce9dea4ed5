// Copyright 2026 The FairNoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fairnoise: corrupt, estimate, dp-calibrate, train, sweep, metrics.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.
// Tables and models go to files; stdout carries only human summaries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fairnoise/csv_io.h"
#include "fairnoise/error.h"
#include "fairnoise/estimation.h"
#include "fairnoise/fairtrain.h"
#include "fairnoise/metrics.h"
#include "fairnoise/noise.h"
#include "fairnoise/sweep.h"

namespace fairnoise {
namespace {

using nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNumerical = 3 };

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSchemaError:
    case ErrorCode::kIoError:
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kEmptySlice:
      return kData;
    case ErrorCode::kInvalidBaseRate:
    case ErrorCode::kDegenerateBaseRate:
    case ErrorCode::kDegenerateConditional:
      return kNumerical;
    default:
      return kUsage;
  }
}

void WriteJson(const std::string& path, const ordered_json& value) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << value.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

Criterion CriterionFlag(const std::string& name) { return ParseCriterion(name); }

ordered_json RatesJson(const CCNNoise& rates) {
  return {{"rho_plus", rates.rho_plus()}, {"rho_minus", rates.rho_minus()}};
}

struct CorruptArgs {
  std::string input;
  std::string output;
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  std::uint64_t seed = 0;
};

int RunCorrupt(const CorruptArgs& args) {
  const CsvTable table = load_csv(args.input);
  const long group0 = table.data.Count(Slice::Group(0));
  const long group1 = table.data.Count(Slice::Group(1));
  const InjectionResult result = inject_ccn_traced(
      table.data, CCNNoise(args.rho_plus, args.rho_minus), args.seed);
  write_csv(args.output, result.data, table.feature_names);
  const auto fraction = [](long k, long n) {
    return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
  };
  std::printf("examples: %lld\n", static_cast<long long>(table.data.size()));
  std::printf("flipped A=1 -> 0: %ld of %ld (%.4f)\n", result.flips_to_zero,
              group1, fraction(result.flips_to_zero, group1));
  std::printf("flipped A=0 -> 1: %ld of %ld (%.4f)\n", result.flips_to_one,
              group0, fraction(result.flips_to_one, group0));
  std::printf("corrupted base rate: %.6f\n", result.data.BaseRate());
  return kOk;
}

struct EstimateArgs {
  std::string input;
  std::string output;
  std::string criterion = "dp";
};

int RunEstimate(const EstimateArgs& args) {
  const Dataset data = load_csv(args.input).data;
  ordered_json report;
  if (CriterionFlag(args.criterion) == Criterion::kDemographicParity) {
    const CCNEstimate est = estimate_ccn_rates(data);
    const MCNoise mc =
        ccn_to_mc_from_corrupted(est.rates, est.corrupted_base_rate).noise;
    report = {{"criterion", "dp"},
              {"rates", RatesJson(est.rates)},
              {"clamped", est.clamped},
              {"corrupted_base_rate", est.corrupted_base_rate},
              {"alpha", mc.alpha()},
              {"beta", mc.beta()},
              {"scale", mc.Scale()}};
    std::printf("rho+ = %.4f  rho- = %.4f%s\n", est.rates.rho_plus(),
                est.rates.rho_minus(), est.clamped ? "  (shrunk)" : "");
    std::printf("alpha = %.4f  beta = %.4f  scale = %.4f\n", mc.alpha(),
                mc.beta(), mc.Scale());
  } else {
    const EOEstimate est = estimate_eo_rates(data);
    report = {{"criterion", "eo"},
              {"rates", RatesJson(est.slice_rates)},
              {"clamped", est.clamped},
              {"corrupted_base_rate", est.slice_base_rate},
              {"alpha", est.noise.alpha_prime()},
              {"beta", est.noise.beta_prime()},
              {"scale", est.noise.Scale()}};
    std::printf("Y=1 slice: rho+ = %.4f  rho- = %.4f%s\n",
                est.slice_rates.rho_plus(), est.slice_rates.rho_minus(),
                est.clamped ? "  (shrunk)" : "");
    std::printf("alpha' = %.4f  beta' = %.4f  scale = %.4f\n",
                est.noise.alpha_prime(), est.noise.beta_prime(), est.noise.Scale());
  }
  if (!args.output.empty()) WriteJson(args.output, report);
  return kOk;
}

struct CalibrateArgs {
  std::optional<double> epsilon;
  std::optional<double> rho;
  double base_rate = 0.5;
};

int RunCalibrate(const CalibrateArgs& args) {
  const double rho = args.rho ? *args.rho : dp_rho_for_epsilon(*args.epsilon);
  const double epsilon = args.rho ? dp_epsilon_for_rho(*args.rho) : *args.epsilon;
  const MCNoise mc = ccn_to_mc(CCNNoise(rho, rho), args.base_rate).noise;
  std::printf("epsilon = %.4f\n", epsilon);
  std::printf("rho = %.4f\n", rho);
  std::printf("tolerance scale at base rate %.4f: %.4f\n", args.base_rate,
              mc.Scale());
  return kOk;
}

struct TrainArgs {
  std::string input;
  std::string model;
  std::string trace;
  std::string criterion = "dp";
  double tau = 0.1;
  std::optional<double> rho_plus;
  std::optional<double> rho_minus;
  bool estimate_noise = false;
  std::uint64_t seed = 0;
};

ordered_json TraceJson(const TrainTrace& trace) {
  ordered_json out = {{"requested_tolerance", trace.requested_tolerance},
                      {"tolerance", trace.tolerance},
                      {"infeasible", trace.infeasible},
                      {"final_violation", trace.final_violation},
                      {"final_risk", trace.final_risk}};
  if (trace.noise_scale) out["noise_scale"] = *trace.noise_scale;
  if (trace.estimated_rates) {
    out["estimated_rates"] = RatesJson(*trace.estimated_rates);
  }
  ordered_json iterates = ordered_json::array();
  for (const auto& it : trace.iterates) {
    iterates.push_back({{"iteration", it.iteration},
                        {"lambda_plus", it.lambda_plus},
                        {"lambda_minus", it.lambda_minus},
                        {"violation", it.violation},
                        {"risk", it.risk},
                        {"best_gap", it.best_gap}});
  }
  out["iterates"] = std::move(iterates);
  return out;
}

int RunTrain(const TrainArgs& args) {
  if (args.rho_plus.has_value() != args.rho_minus.has_value()) {
    throw Error(ErrorCode::kInvalidArgument,
                "--rho-plus and --rho-minus must be given together");
  }
  const Dataset data = load_csv(args.input).data;
  const FairnessSpec spec =
      FairnessSpec::Default(CriterionFlag(args.criterion), args.tau);
  TrainConfig config;
  config.seed = args.seed;

  std::optional<FairClassifier> model;
  if (args.estimate_noise) {
    model = train_fair_noisy(data, spec, EstimateNoise{}, config);
  } else if (args.rho_plus) {
    const CCNNoise rates(*args.rho_plus, *args.rho_minus);
    if (spec.criterion == Criterion::kDemographicParity) {
      const MCNoise mc = ccn_to_mc_from_corrupted(rates, data.BaseRate()).noise;
      model = train_fair_noisy(data, spec, mc, config);
    } else {
      const Dataset positives = data.Filter(Slice::Label(1));
      const MCNoise mc =
          ccn_to_mc_from_corrupted(rates, positives.BaseRate()).noise;
      model = train_fair_noisy(
          data, spec, EOConditionalNoise(mc.alpha(), mc.beta()), config);
    }
  } else {
    model = train_fair(data, spec, config);
  }
  save_model(*model, args.model);
  if (!args.trace.empty()) WriteJson(args.trace, TraceJson(model->trace()));

  const TrainTrace& trace = model->trace();
  std::printf("criterion: %s\n", std::string(CriterionName(spec.criterion)).c_str());
  std::printf("tau = %.4f\n", trace.requested_tolerance);
  std::printf("tau' = %.4f\n", trace.tolerance);
  if (trace.noise_scale) std::printf("noise scale = %.4f\n", *trace.noise_scale);
  if (trace.estimated_rates) {
    std::printf("estimated rho+ = %.4f  rho- = %.4f\n",
                trace.estimated_rates->rho_plus(),
                trace.estimated_rates->rho_minus());
  }
  std::printf("training violation = %.4f  training error = %.4f%s\n",
              trace.final_violation, trace.final_risk,
              trace.infeasible ? "  (no feasible iterate)" : "");
  return kOk;
}

struct SweepArgs {
  std::string config;
  std::string output;
  std::string input;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::vector<std::string> settings;
};

int RunSweepCommand(const SweepArgs& args) {
  ExperimentConfig config;
  if (!args.config.empty()) config = LoadExperimentConfig(args.config);
  for (const auto& setting : args.settings) {
    const auto eq = setting.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--set expects KEY=VALUE, got '" + setting + "'");
    }
    ApplySetting(config, std::string_view(setting).substr(0, eq),
                 std::string_view(setting).substr(eq + 1));
  }
  if (!args.input.empty()) config.input = args.input;
  if (args.seed) config.seed = *args.seed;
  if (args.jobs) config.jobs = *args.jobs;
  config.Validate();

  const auto rows = run_sweep(config);
  emit_results(rows, args.output);
  long failed = 0;
  for (const auto& row : rows) failed += row.failed();
  std::printf("%zu rows -> %s\n", rows.size(), args.output.c_str());
  std::printf("summary -> %s\n", SummaryPath(args.output).c_str());
  std::printf("%-10s %6s %8s %8s %10s %8s\n", "method", "tau", "rho+^",
              "rho-^", "violation", "error");
  for (const auto& s : aggregate_results(rows)) {
    if (s.split != Split::kTest) continue;
    std::printf("%-10s %6.3f %8.3f %8.3f %10.4f %8.4f\n",
                std::string(MethodName(s.method)).c_str(), s.tau,
                s.rho_plus_hat, s.rho_minus_hat, s.fairness_violation_mean,
                s.error_mean);
  }
  if (failed > 0) {
    std::printf("%ld failed rows (NaN)\n", failed);
    return kNumerical;
  }
  return kOk;
}

struct MetricsArgs {
  std::string model;
  std::string input;
  std::string output;
};

int RunMetrics(const MetricsArgs& args) {
  const FairClassifier model = load_model(args.model);
  const Dataset data = load_csv(args.input).data;
  if (model.dimension() != data.dimension()) {
    throw Error(ErrorCode::kSchemaError,
                "model dimension " + std::to_string(model.dimension()) +
                    " does not match data dimension " +
                    std::to_string(data.dimension()));
  }
  const BitVector pred = model.Predict(data);
  const double dp = ddp(data, pred);
  const double eo = deo(data, pred);
  const double risk = accuracy_risk(data, pred);
  std::printf("ddp = %.4f\ndeo = %.4f\nerror = %.4f\n", dp, eo, risk);
  if (!args.output.empty()) {
    WriteJson(args.output, {{"ddp", dp}, {"deo", eo}, {"error", risk}});
  }
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Fair classification with noisy sensitive attributes."};
  app.require_subcommand(1);

  CorruptArgs corrupt;
  auto* c = app.add_subcommand("corrupt", "Flip sensitive bits (CCN noise).");
  c->add_option("--input", corrupt.input, "Input CSV")->required();
  c->add_option("--output", corrupt.output, "Output CSV")->required();
  c->add_option("--rho-plus", corrupt.rho_plus, "P[flip | A=1]");
  c->add_option("--rho-minus", corrupt.rho_minus, "P[flip | A=0]");
  c->add_option("--seed", corrupt.seed);

  EstimateArgs estimate;
  auto* e = app.add_subcommand("estimate", "Estimate noise rates.");
  e->add_option("--input", estimate.input, "Corrupted CSV")->required();
  e->add_option("--output", estimate.output, "JSON report");
  e->add_option("--criterion", estimate.criterion, "dp or eo");

  CalibrateArgs calibrate;
  auto* d = app.add_subcommand("dp-calibrate",
                               "Match flip probability to a DP level.");
  auto* eps = d->add_option("--epsilon", calibrate.epsilon);
  auto* rho = d->add_option("--rho", calibrate.rho);
  eps->excludes(rho);
  d->add_option("--base-rate", calibrate.base_rate,
                "Clean P[A=1] for the tolerance scale");

  TrainArgs train;
  auto* t = app.add_subcommand("train", "Train a fair classifier.");
  t->add_option("--input", train.input, "Training CSV")->required();
  t->add_option("--model", train.model, "Output model file")->required();
  t->add_option("--trace", train.trace, "JSON training trace");
  t->add_option("--criterion", train.criterion, "dp or eo");
  t->add_option("--tau", train.tau)->required();
  auto* rp = t->add_option("--rho-plus", train.rho_plus);
  auto* rm = t->add_option("--rho-minus", train.rho_minus);
  auto* est = t->add_flag("--estimate-noise", train.estimate_noise,
                          "Estimate the rates from the input");
  est->excludes(rp)->excludes(rm);
  t->add_option("--seed", train.seed);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Run a benchmark sweep.");
  s->add_option("--config", sweep.config, "Key-value config file");
  s->add_option("--output", sweep.output, "Results CSV")->required();
  s->add_option("--input", sweep.input, "Dataset CSV (default: synthetic)");
  s->add_option("--seed", sweep.seed);
  s->add_option("--jobs", sweep.jobs)->envname("FAIRNOISE_JOBS");
  s->add_option("--set", sweep.settings, "Override KEY=VALUE");

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "Evaluate a model on a dataset.");
  m->add_option("--model", metrics.model)->required();
  m->add_option("--input", metrics.input)->required();
  m->add_option("--output", metrics.output, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kUsage;
  }
  if (d->parsed() && !calibrate.epsilon && !calibrate.rho) {
    std::cerr << "dp-calibrate: one of --epsilon or --rho is required\n";
    return kUsage;
  }

  try {
    if (c->parsed()) return RunCorrupt(corrupt);
    if (e->parsed()) return RunEstimate(estimate);
    if (d->parsed()) return RunCalibrate(calibrate);
    if (t->parsed()) return RunTrain(train);
    if (s->parsed()) return RunSweepCommand(sweep);
    return RunMetrics(metrics);
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return ExitCodeFor(error.code());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kNumerical;
  }
}

}  // namespace
}  // namespace fairnoise

int main(int argc, char** argv) { return fairnoise::Main(argc, argv); }
