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

#ifndef FAIRNOISE_SWEEP_H_
#define FAIRNOISE_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fairnoise/fairtrain.h"
#include "fairnoise/metrics.h"
#include "fairnoise/synthetic.h"

namespace fairnoise {

enum class Method { kNocor, kCor, kCorScale, kDenoise };
enum class Split { kTrain, kTest };
// Where the noise rates handed to cor_scale and denoise come from.
enum class RateSource { kKnown, kEstimate };

std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);
std::string_view SplitName(Split split);

struct ExperimentConfig {
  // CSV path; empty selects the synthetic generator.
  std::string input;
  bool drop_missing = false;
  SyntheticConfig synthetic = SyntheticConfig::Default();

  Criterion criterion = Criterion::kDemographicParity;
  FairnessLoss fairness_loss = FairnessLoss::kPredictNonPositive;

  // CCN noise injected into the training split.
  double rho_plus = 0.15;
  double rho_minus = 0.15;
  RateSource rate_source = RateSource::kKnown;
  // With known rates, the supplied estimates (rho+^, rho-^) swept as a
  // cartesian grid; an empty grid uses the true injected rate.
  std::vector<double> rho_plus_hat;
  std::vector<double> rho_minus_hat;

  std::vector<double> tau_grid = {0.02, 0.05, 0.1, 0.15, 0.2};
  std::vector<Method> methods = {Method::kNocor, Method::kCor,
                                 Method::kCorScale, Method::kDenoise};
  int repetitions = 3;
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
  int jobs = 1;
  TrainConfig train;

  void Validate() const;
};

// Applies one `key = value` setting; keys mirror the field names above
// (synthetic.* and train.* for nested fields). Throws kInvalidArgument for an
// unknown key or a malformed value.
void ApplySetting(ExperimentConfig& config, std::string_view key,
                  std::string_view value);
// Flat key-value document: one `key = value` per line, '#' comments.
ExperimentConfig ParseExperimentConfig(std::istream& in,
                                       ExperimentConfig base = {});
ExperimentConfig LoadExperimentConfig(const std::string& path,
                                      ExperimentConfig base = {});

struct ResultRow {
  Method method = Method::kNocor;
  double tau = 0.0;
  double tau_prime = 0.0;
  double rho_plus_hat = 0.0;
  double rho_minus_hat = 0.0;
  Split split = Split::kTrain;
  // Measured against the clean sensitive attribute. NaN marks a failed cell.
  double fairness_violation = 0.0;
  double error = 0.0;
  std::uint64_t seed = 0;
  int repetition = 0;

  bool failed() const;
  bool operator==(const ResultRow& other) const;
};

// One repetition: an 80/20 (train_fraction) random split seeded by
// seed + repetition, CCN corruption of the training split only, one fit per
// method and tau, and evaluation of both splits on clean attributes. Rows are
// sorted by (method, tau, rho+^, rho-^, repetition, split).
std::vector<ResultRow> run_sweep(const ExperimentConfig& config);

inline constexpr const char* kResultsHeader =
    "method,tau,tau_prime,rho_plus_hat,rho_minus_hat,split,"
    "fairness_violation,error,seed,repetition";

struct SummaryRow {
  Method method = Method::kNocor;
  double tau = 0.0;
  double rho_plus_hat = 0.0;
  double rho_minus_hat = 0.0;
  Split split = Split::kTrain;
  long count = 0;
  double tau_prime_mean = 0.0;
  double fairness_violation_mean = 0.0;
  double fairness_violation_std = 0.0;
  double error_mean = 0.0;
  double error_std = 0.0;
};

// Means and sample standard deviations over repetitions per
// (method, tau, rho+^, rho-^, split); failed rows are skipped.
std::vector<SummaryRow> aggregate_results(const std::vector<ResultRow>& rows);

void write_results(std::ostream& out, const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results(std::istream& in);
void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);

// `<path without .csv>_summary.csv`.
std::string SummaryPath(const std::string& results_path);
// Writes the results table and its summary companion.
void emit_results(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace fairnoise

#endif  // FAIRNOISE_SWEEP_H_
