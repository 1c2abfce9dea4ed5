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

#ifndef FAIRNOISE_ESTIMATION_H_
#define FAIRNOISE_ESTIMATION_H_

#include <vector>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"
#include "fairnoise/logistic.h"
#include "fairnoise/noise.h"
#include "fairnoise/scorer.h"

namespace fairnoise {

struct PosteriorConfig {
  LogisticConfig logistic;
  // Equal-count bins used to calibrate the logistic score; 0 disables
  // calibration and the raw logistic probability is used.
  int calibration_bins = 50;
  int min_bin_size = 50;
};

// Estimate of P[A_corr = 1 | x] (and y, unless fit on the Y=1 slice): a
// logistic ranking score followed by a monotone binned calibration map.
// Outputs are clamped to [1e-6, 1 - 1e-6].
class PosteriorModel {
 public:
  static constexpr double kClamp = 1e-6;

  PosteriorModel(LinearScorer linear, bool uses_target,
                 std::vector<double> bin_upper_edges,
                 std::vector<double> bin_values, const LogisticFit& fit);

  // `target` is ignored when the model was fit on the Y=1 slice.
  double Predict(const FeatureRef& x, int target) const;
  Eigen::VectorXd PredictAll(const Dataset& data) const;
  // Uncalibrated logistic scores; monotone with PredictAll.
  Eigen::VectorXd RankScores(const Dataset& data) const;

  bool uses_target() const { return uses_target_; }
  bool calibrated() const { return !bin_values_.empty(); }
  int iterations() const { return iterations_; }
  double final_loss() const { return final_loss_; }
  // False when the solver hit its iteration cap above the gradient
  // tolerance. The model is still usable.
  bool converged() const { return converged_; }

 private:
  double Calibrate(double score) const;

  LinearScorer linear_;
  bool uses_target_;
  std::vector<double> bin_upper_edges_;
  std::vector<double> bin_values_;
  int iterations_;
  double final_loss_;
  bool converged_;
};

PosteriorModel fit_posterior(const Dataset& data, bool condition_on_y1,
                             const PosteriorConfig& config = {});

struct EstimatorConfig {
  PosteriorConfig posterior;
  double low_quantile = 0.005;
  double high_quantile = 0.995;
  // Estimates are shrunk proportionally when rho+ + rho- reaches this.
  double max_total_rate = 1.0 - 1e-3;
};

struct CCNEstimate {
  CCNNoise rates;
  // Set when the raw estimates summed past max_total_rate and were shrunk.
  bool clamped = false;
  double corrupted_base_rate = 0.0;
};

struct EOEstimate {
  EOConditionalNoise noise;
  CCNNoise slice_rates;
  bool clamped = false;
  double slice_base_rate = 0.0;
};

// Anchor-point estimator: under CCN, eta_corr = rho- + (1 - rho+ - rho-) eta,
// so the extreme quantiles of the fitted posterior recover the flip rates.
CCNEstimate estimate_ccn_rates(const Dataset& data,
                               const EstimatorConfig& config = {});
// The same estimator on the Y=1 slice, converted to (alpha', beta') with that
// slice's corrupted base rate.
EOEstimate estimate_eo_rates(const Dataset& data,
                             const EstimatorConfig& config = {});

// Linear-interpolated sample quantile (type 7); `values` need not be sorted.
double SampleQuantile(std::vector<double> values, double q);

}  // namespace fairnoise

#endif  // FAIRNOISE_ESTIMATION_H_
