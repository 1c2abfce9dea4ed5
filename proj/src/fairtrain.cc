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

#include "fairnoise/fairtrain.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <utility>

#include "fairnoise/error.h"
#include "fairnoise/logistic.h"

namespace fairnoise {
namespace {

// max |sigma''(s)| = 1 / (6 sqrt 3).
constexpr double kMaxSigmoidCurvature = 0.0962250448649376;

void RequireConstraintSlices(const Dataset& data, Criterion criterion) {
  for (const int a : {0, 1}) {
    if (data.Count(CriterionSlice(criterion, a)) == 0) {
      throw Error(ErrorCode::kEmptySlice,
                  std::string("training data has no examples in group A=") +
                      std::to_string(a) +
                      (criterion == Criterion::kEqualOpportunity ? " with Y=1"
                                                                 : ""));
    }
  }
}

// The constrained problem on standardized features with a trailing
// intercept column.
class SaddleProblem {
 public:
  SaddleProblem(const Dataset& data, const FairnessSpec& spec)
      : data_(data),
        spec_(spec),
        standardizer_(Standardizer::Fit(data.features())),
        n_(static_cast<double>(data.size())) {
    const Eigen::Index d = data.dimension();
    z_.resize(data.size(), d + 1);
    z_.leftCols(d) = standardizer_.Apply(data.features());
    z_.col(d).setOnes();
    y_.resize(data.size());
    group_.assign(static_cast<std::size_t>(data.size()), -1);
    const Eigen::VectorXd norms = z_.rowwise().squaredNorm();
    double sums[2] = {0.0, 0.0};
    for (Eigen::Index i = 0; i < data.size(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      y_[i] = data.target()[k];
      for (const int a : {0, 1}) {
        if (CriterionSlice(spec.criterion, a)
                .Contains(data.sensitive()[k], data.target()[k])) {
          group_[k] = a;
          group_size_[a] += 1.0;
          sums[a] += norms[i];
        }
      }
    }
    mean_sq_norm_ = norms.mean();
    for (const int a : {0, 1}) {
      if (group_size_[a] > 0.0) group_sq_norm_[a] = sums[a] / group_size_[a];
    }
  }

  Eigen::Index parameters() const { return z_.cols(); }

  double StepBound(double lambda, double regularization) const {
    return 0.25 * mean_sq_norm_ +
           std::abs(lambda) * kMaxSigmoidCurvature *
               (group_sq_norm_[0] + group_sq_norm_[1]) +
           regularization;
  }

  // Smoothed fairness loss of one example and its derivative in the score.
  std::pair<double, double> SmoothLoss(double p, double y) const {
    const double slope = p * (1.0 - p);
    if (spec_.loss == FairnessLoss::kZeroOne && y == 0.0) return {p, slope};
    return {1.0 - p, -slope};
  }

  Eigen::VectorXd Gradient(const Eigen::VectorXd& theta, double lambda,
                           double regularization) const {
    const Eigen::VectorXd s = z_ * theta;
    Eigen::VectorXd coeff(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      const double p = Sigmoid(s[i]);
      coeff[i] = (p - y_[i]) / n_;
      const int a = group_[static_cast<std::size_t>(i)];
      if (a >= 0 && lambda != 0.0) {
        const double sign = a == 0 ? 1.0 : -1.0;
        coeff[i] += lambda * sign * SmoothLoss(p, y_[i]).second / group_size_[a];
      }
    }
    Eigen::VectorXd grad = z_.transpose() * coeff;
    grad.head(grad.size() - 1) += regularization * theta.head(theta.size() - 1);
    return grad;
  }

  // Mean log loss and smoothed signed disparity.
  std::pair<double, double> SurrogateValues(const Eigen::VectorXd& theta) const {
    const Eigen::VectorXd s = z_ * theta;
    double risk = 0.0;
    double group_loss[2] = {0.0, 0.0};
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      risk += Softplus(s[i]) - y_[i] * s[i];
      const int a = group_[static_cast<std::size_t>(i)];
      if (a >= 0) group_loss[a] += SmoothLoss(Sigmoid(s[i]), y_[i]).first;
    }
    return {risk / n_, group_loss[0] / group_size_[0] -
                           group_loss[1] / group_size_[1]};
  }

  LinearScorer ToScorer(const Eigen::VectorXd& theta) const {
    const Eigen::Index d = theta.size() - 1;
    return standardizer_.Unstandardize(theta.head(d), theta[d]);
  }

  const Dataset& data() const { return data_; }
  const FairnessSpec& spec() const { return spec_; }

 private:
  const Dataset& data_;
  FairnessSpec spec_;
  Standardizer standardizer_;
  double n_;
  Eigen::MatrixXd z_;
  Eigen::VectorXd y_;
  std::vector<int> group_;
  double group_size_[2] = {0.0, 0.0};
  double group_sq_norm_[2] = {0.0, 0.0};
  double mean_sq_norm_ = 0.0;
};

void FinishTrace(FairClassifier& model, TrainTrace trace, const Dataset& data,
                 const FairnessSpec& spec) {
  const BitVector predictions = model.Predict(data);
  trace.final_violation = disparity(data, predictions, spec);
  trace.final_risk = accuracy_risk(data, predictions);
  model.set_trace(std::move(trace));
}

std::string FormatDouble(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

}  // namespace

void TrainConfig::Validate() const {
  if (!(dual_step > 0.0) || !(dual_bound > 0.0) || !(base_step > 0.0) ||
      !(initial_dual > 0.0) || !(initial_dual < dual_bound / 2.0) ||
      outer_iterations < 1 || base_iterations < 1 || !(regularization >= 0.0) ||
      !(feasibility_slack >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "train config needs positive steps, bound and iteration "
                "counts and nonnegative regularization and slack");
  }
}

FairClassifier::FairClassifier(std::vector<LinearScorer> members,
                               std::vector<double> weights)
    : members_(std::move(members)), weights_(std::move(weights)) {
  if (members_.empty() || members_.size() != weights_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "ensemble needs one weight per member and at least one member");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (!(weights_[k] >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "negative ensemble weight");
    }
    if (members_[k].weights.size() != members_.front().weights.size()) {
      throw Error(ErrorCode::kInvalidArgument, "member dimensions differ");
    }
    total += weights_[k];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument, "ensemble weights must sum to 1");
  }
}

double FairClassifier::Score(const FeatureRef& x) const {
  double score = 0.0;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    score += weights_[k] * members_[k](x);
  }
  return score;
}

Eigen::VectorXd FairClassifier::ScoreAll(const FeatureMatrix& x) const {
  Eigen::VectorXd scores = Eigen::VectorXd::Zero(x.rows());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    scores += weights_[k] * members_[k].ScoreAll(x);
  }
  return scores;
}

BitVector FairClassifier::Predict(const Dataset& data) const {
  const Eigen::VectorXd scores = ScoreAll(data.features());
  BitVector out(static_cast<std::size_t>(scores.size()));
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(PredictFromScore(scores[i]));
  }
  return out;
}

FairClassifier train_fair(const Dataset& data, const FairnessSpec& spec,
                          const TrainConfig& config) {
  RequireNonEmpty(data);
  spec.Validate();
  config.Validate();
  RequireConstraintSlices(data, spec.criterion);

  const SaddleProblem problem(data, spec);
  const double tau = spec.tolerance;
  const double bound = config.dual_bound;

  TrainTrace trace;
  trace.requested_tolerance = tau;
  trace.tolerance = tau;

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(problem.parameters());
  // Both duals start near initial_dual rather than at B/3.
  double dual_plus = std::log(config.initial_dual / bound);
  double dual_minus = dual_plus;
  double best_upper = std::numeric_limits<double>::infinity();
  double best_lower = -std::numeric_limits<double>::infinity();
  std::vector<LinearScorer> iterates;

  for (int t = 0; t < config.outer_iterations; ++t) {
    // lambda_k = B exp(theta_k) / (1 + sum exp(theta)), evaluated with a
    // max shift.
    const double shift = std::max({0.0, dual_plus, dual_minus});
    const double e_plus = std::exp(dual_plus - shift);
    const double e_minus = std::exp(dual_minus - shift);
    const double denom = std::exp(-shift) + e_plus + e_minus;
    const double lambda_plus = bound * e_plus / denom;
    const double lambda_minus = bound * e_minus / denom;
    const double lambda = lambda_plus - lambda_minus;

    const double step = config.base_step /
                        problem.StepBound(lambda, config.regularization);
    for (int k = 0; k < config.base_iterations; ++k) {
      theta -= step * problem.Gradient(theta, lambda, config.regularization);
    }

    LinearScorer member = problem.ToScorer(theta);
    const BitVector predictions = PredictAll(member, data);
    const double g = signed_disparity(data, predictions, spec);
    const auto [surrogate_risk, smooth_g] = problem.SurrogateValues(theta);

    IterateRecord record;
    record.iteration = t;
    record.lambda_plus = lambda_plus;
    record.lambda_minus = lambda_minus;
    record.signed_violation = g;
    record.violation = std::abs(g);
    record.risk = accuracy_risk(data, predictions);
    record.surrogate_risk = surrogate_risk;
    best_upper = std::min(
        best_upper, surrogate_risk + bound * std::max(0.0, std::abs(g) - tau));
    best_lower = std::max(best_lower,
                          surrogate_risk + lambda_plus * (smooth_g - tau) +
                              lambda_minus * (-smooth_g - tau));
    record.best_gap = best_upper - best_lower;
    trace.iterates.push_back(record);
    iterates.push_back(std::move(member));

    dual_plus += config.dual_step * (g - tau);
    dual_minus += config.dual_step * (-g - tau);
  }

  const double limit = tau + config.feasibility_slack;
  std::optional<std::size_t> best_feasible;
  std::size_t least_violating = 0;
  for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
    const auto& rec = trace.iterates[k];
    if (rec.violation < trace.iterates[least_violating].violation) {
      least_violating = k;
    }
    if (rec.violation <= limit &&
        (!best_feasible || rec.risk < trace.iterates[*best_feasible].risk)) {
      best_feasible = k;
    }
  }
  trace.infeasible = !best_feasible.has_value();

  if (config.return_mode == ReturnMode::kAverage && best_feasible) {
    const double w = 1.0 / static_cast<double>(iterates.size());
    FairClassifier model(std::move(iterates),
                         std::vector<double>(trace.iterates.size(), w));
    FinishTrace(model, std::move(trace), data, spec);
    return model;
  }
  const std::size_t chosen = best_feasible.value_or(least_violating);
  FairClassifier model({iterates[chosen]}, {1.0});
  FinishTrace(model, std::move(trace), data, spec);
  return model;
}

FairClassifier train_unconstrained(const Dataset& data,
                                   const TrainConfig& config) {
  RequireNonEmpty(data);
  config.Validate();
  // Both groups may be absent here; use a DP spec only for its shape.
  const FairnessSpec spec =
      FairnessSpec::Default(Criterion::kDemographicParity, 1.0);
  const SaddleProblem problem(data, spec);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(problem.parameters());
  const double step =
      config.base_step / problem.StepBound(0.0, config.regularization);
  const long total = static_cast<long>(config.outer_iterations) *
                     config.base_iterations;
  for (long k = 0; k < total; ++k) {
    theta -= step * problem.Gradient(theta, 0.0, config.regularization);
  }
  FairClassifier model({problem.ToScorer(theta)}, {1.0});
  TrainTrace trace;
  trace.requested_tolerance = trace.tolerance = 1.0;
  const BitVector predictions = model.Predict(data);
  trace.final_risk = accuracy_risk(data, predictions);
  model.set_trace(std::move(trace));
  return model;
}

FairClassifier train_fair_noisy(const Dataset& corrupted,
                                const FairnessSpec& spec,
                                const NoiseSource& noise,
                                const TrainConfig& config) {
  spec.Validate();
  double scale = 1.0;
  std::optional<CCNNoise> estimated;
  if (const auto* mc = std::get_if<MCNoise>(&noise)) {
    scale = mc->Scale();
  } else if (const auto* eo = std::get_if<EOConditionalNoise>(&noise)) {
    scale = eo->Scale();
  } else {
    const auto& request = std::get<EstimateNoise>(noise);
    if (spec.criterion == Criterion::kDemographicParity) {
      const CCNEstimate est = estimate_ccn_rates(corrupted, request.config);
      estimated = est.rates;
      scale = ccn_to_mc_from_corrupted(est.rates, est.corrupted_base_rate)
                  .noise.Scale();
    } else {
      const EOEstimate est = estimate_eo_rates(corrupted, request.config);
      estimated = est.slice_rates;
      scale = est.noise.Scale();
    }
  }
  const double scaled_tau = spec.tolerance * scale;
  FairClassifier model =
      train_fair(corrupted, spec.WithTolerance(scaled_tau), config);
  TrainTrace trace = model.trace();
  trace.requested_tolerance = spec.tolerance;
  trace.tolerance = scaled_tau;
  trace.noise_scale = scale;
  trace.estimated_rates = estimated;
  model.set_trace(std::move(trace));
  return model;
}

double reduction_constraint_value(const Dataset& data,
                                  std::span<const std::uint8_t> predictions,
                                  Criterion criterion) {
  const Slice overall = criterion == Criterion::kDemographicParity
                            ? Slice::All()
                            : Slice::Label(1);
  const FairnessLoss positive = FairnessLoss::kPredictNonPositive;
  // E[c_f] = 1 - L̄ under the predict-non-positive loss.
  const double rate_all =
      1.0 - mean_fairness_loss(data, predictions, overall, positive);
  double worst = 0.0;
  for (const int a : {0, 1}) {
    const double rate_a =
        1.0 - mean_fairness_loss(data, predictions,
                                 CriterionSlice(criterion, a), positive);
    worst = std::max(worst, std::abs(rate_a - rate_all));
  }
  return worst;
}

double reduction_constraint_value(const Dataset& data, const Scorer& scorer,
                                  Criterion criterion) {
  return reduction_constraint_value(data, PredictAll(scorer, data), criterion);
}

double mean_diff_from_reduction(double value, double pi_weight) {
  if (!(pi_weight >= 0.5 && pi_weight <= 1.0)) {
    throw Error(ErrorCode::kOutOfRangeWeight,
                "group weight must lie in [0.5, 1], got " +
                    std::to_string(pi_weight));
  }
  return value / pi_weight;
}

double conservative_half_tolerance(double tau, const MCNoise& noise) {
  return 0.5 * scale_tolerance(tau, noise);
}

double conservative_half_tolerance(double tau,
                                   const EOConditionalNoise& noise) {
  return 0.5 * scale_tolerance(tau, noise);
}

void save_model(const FairClassifier& model, std::ostream& out) {
  out << "fairnoise-model 1\n";
  out << "dimension " << model.dimension() << "\n";
  out << "members " << model.members().size() << "\n";
  for (std::size_t k = 0; k < model.members().size(); ++k) {
    const auto& m = model.members()[k];
    out << "member " << FormatDouble(model.weights()[k]) << " "
        << FormatDouble(m.intercept);
    for (Eigen::Index j = 0; j < m.weights.size(); ++j) {
      out << " " << FormatDouble(m.weights[j]);
    }
    out << "\n";
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing model");
}

void save_model(const FairClassifier& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path);
  save_model(model, out);
}

FairClassifier load_model(std::istream& in) {
  auto fail = [](const std::string& what) {
    return Error(ErrorCode::kParseError, "model file: " + what);
  };
  std::string tag;
  int version = 0;
  if (!(in >> tag >> version) || tag != "fairnoise-model" || version != 1) {
    throw fail("bad header");
  }
  Eigen::Index dimension = 0;
  std::size_t count = 0;
  if (!(in >> tag >> dimension) || tag != "dimension" || dimension < 1) {
    throw fail("bad dimension line");
  }
  if (!(in >> tag >> count) || tag != "members" || count < 1) {
    throw fail("bad member count");
  }
  // strtod round-trips 17 significant digits exactly.
  auto read_double = [&](double& value) {
    std::string token;
    if (!(in >> token)) return false;
    char* end = nullptr;
    value = std::strtod(token.c_str(), &end);
    return end != token.c_str() && *end == '\0';
  };
  std::vector<LinearScorer> members(count);
  std::vector<double> weights(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!(in >> tag) || tag != "member") throw fail("expected member line");
    members[k].weights.resize(dimension);
    if (!read_double(weights[k]) || !read_double(members[k].intercept)) {
      throw fail("bad member values");
    }
    for (Eigen::Index j = 0; j < dimension; ++j) {
      if (!read_double(members[k].weights[j])) throw fail("bad coefficient");
    }
  }
  return FairClassifier(std::move(members), std::move(weights));
}

FairClassifier load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return load_model(in);
}

}  // namespace fairnoise
