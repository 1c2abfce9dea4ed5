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

#ifndef FAIRNOISE_FAIRTRAIN_H_
#define FAIRNOISE_FAIRTRAIN_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"
#include "fairnoise/estimation.h"
#include "fairnoise/metrics.h"
#include "fairnoise/noise.h"
#include "fairnoise/scorer.h"

namespace fairnoise {

enum class ReturnMode {
  // Uniform ensemble of all outer iterates.
  kAverage,
  // The lowest-risk iterate meeting the constraint, else the least violating.
  kBestIterate,
};

struct TrainConfig {
  // Exponentiated-gradient step on the two duals.
  double dual_step = 1.0;
  // Bound B on lambda+ + lambda-.
  double dual_bound = 100.0;
  // Starting value of each dual; in (0, B/2).
  double initial_dual = 1.0;
  int outer_iterations = 100;
  // Gradient steps of the primal best response per outer iteration.
  int base_iterations = 50;
  // Multiplier on the step 1/L, with L a curvature bound of the primal
  // objective at the current duals.
  double base_step = 1.0;
  double regularization = 1e-3;
  // Recorded for provenance; training itself has no random steps.
  std::uint64_t seed = 0;
  ReturnMode return_mode = ReturnMode::kBestIterate;
  // An iterate is feasible when its violation is <= tolerance + slack.
  double feasibility_slack = 0.0;

  void Validate() const;
};

struct IterateRecord {
  int iteration = 0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  // Exact 0-1 signed disparity L̄(group 0) - L̄(group 1) and its magnitude.
  double signed_violation = 0.0;
  double violation = 0.0;
  double risk = 0.0;            // training 0-1 error
  double surrogate_risk = 0.0;  // training mean log loss
  // min over iterates of [surrogate risk + B * max(0, |g| - tau)] minus the
  // max over iterates of the surrogate Lagrangian at the played duals.
  // Non-increasing by construction.
  double best_gap = 0.0;
};

struct TrainTrace {
  double requested_tolerance = 0.0;
  // Tolerance handed to the constrained problem (tau' for noise-aware runs).
  double tolerance = 0.0;
  // 1 - alpha - beta (or 1 - alpha' - beta') when the tolerance was scaled.
  std::optional<double> noise_scale;
  std::optional<CCNNoise> estimated_rates;
  std::vector<IterateRecord> iterates;
  // No iterate met the constraint; the least violating one was returned.
  bool infeasible = false;
  // Training violation and risk of the returned classifier.
  double final_violation = 0.0;
  double final_risk = 0.0;
};

// A weighted ensemble of linear scorers that predicts with the sign of the
// weighted mean score (zero predicts 0).
class FairClassifier {
 public:
  FairClassifier(std::vector<LinearScorer> members, std::vector<double> weights);

  double Score(const FeatureRef& x) const;
  double operator()(const FeatureRef& x) const { return Score(x); }
  Eigen::VectorXd ScoreAll(const FeatureMatrix& x) const;
  BitVector Predict(const Dataset& data) const;

  Eigen::Index dimension() const { return members_.front().weights.size(); }
  const std::vector<LinearScorer>& members() const { return members_; }
  const std::vector<double>& weights() const { return weights_; }

  const TrainTrace& trace() const { return trace_; }
  void set_trace(TrainTrace trace) { trace_ = std::move(trace); }

 private:
  std::vector<LinearScorer> members_;
  std::vector<double> weights_;
  TrainTrace trace_;
};

// Approximately solves min risk s.t. |L̄_0 - L̄_1| <= tau with a Lagrangian
// saddle point: exponentiated-gradient duals (one per sign of the
// constraint) against a regularized logistic primal whose group rates are
// smoothed with a mean sigmoid. Duals see the exact 0-1 violation.
FairClassifier train_fair(const Dataset& data, const FairnessSpec& spec,
                          const TrainConfig& config = {});

// Plain regularized logistic fit with the trainer's base learner.
FairClassifier train_unconstrained(const Dataset& data,
                                   const TrainConfig& config = {});

struct EstimateNoise {
  EstimatorConfig config;
};
using NoiseSource = std::variant<MCNoise, EOConditionalNoise, EstimateNoise>;

// Trains at tau' = tau (1 - alpha - beta) on data with a corrupted sensitive
// attribute. EstimateNoise runs the anchor-point estimator first (on the
// whole sample for DP, on Y=1 for EO).
FairClassifier train_fair_noisy(const Dataset& corrupted,
                                const FairnessSpec& spec,
                                const NoiseSource& noise,
                                const TrainConfig& config = {});

// max_a |E_{D_a}[c_f] - E_D[c_f]| (DP), or the same on the Y=1 slice (EO).
double reduction_constraint_value(
    const Dataset& data, const Scorer& scorer,
    Criterion criterion = Criterion::kDemographicParity);
double reduction_constraint_value(const Dataset& data,
                                  std::span<const std::uint8_t> predictions,
                                  Criterion criterion);

// value / pi_weight, with pi_weight = max(P[A=0], P[A=1]) in [0.5, 1].
double mean_diff_from_reduction(double value, double pi_weight);

// tau (1 - alpha - beta) / 2: a corrupted reduction-style constraint below
// this implies the clean one is below tau whatever the base rates do.
double conservative_half_tolerance(double tau, const MCNoise& noise);
double conservative_half_tolerance(double tau,
                                   const EOConditionalNoise& noise);

// Plain-text model: a header line, dimension, member count, then one line per
// member "member <weight> <intercept> <coefficients...>" with 17 significant
// digits, so a reload reproduces scores bit-for-bit.
void save_model(const FairClassifier& model, std::ostream& out);
void save_model(const FairClassifier& model, const std::string& path);
FairClassifier load_model(std::istream& in);
FairClassifier load_model(const std::string& path);

}  // namespace fairnoise

#endif  // FAIRNOISE_FAIRTRAIN_H_
