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

#include "fairnoise/estimation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "fairnoise/error.h"

namespace fairnoise {
namespace {

FeatureMatrix DesignMatrix(const Dataset& data, bool with_target) {
  if (!with_target) return data.features();
  FeatureMatrix x(data.size(), data.dimension() + 1);
  x.leftCols(data.dimension()) = data.features();
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    x(i, data.dimension()) = data.target()[static_cast<std::size_t>(i)];
  }
  return x;
}

struct Block {
  double sum = 0.0;
  double count = 0.0;
  double upper_edge = 0.0;
  double mean() const { return sum / count; }
};

// Equal-count bins over sorted scores (runs of equal scores are never split),
// then pool-adjacent-violators so bin means are non-decreasing.
std::vector<Block> CalibrationBlocks(const Eigen::VectorXd& scores,
                                     const BitVector& labels, int bins,
                                     int min_bin_size) {
  const auto n = static_cast<std::size_t>(scores.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return scores[static_cast<Eigen::Index>(a)] <
           scores[static_cast<Eigen::Index>(b)];
  });
  const std::size_t target_size = std::max<std::size_t>(
      static_cast<std::size_t>(std::max(min_bin_size, 1)),
      (n + static_cast<std::size_t>(bins) - 1) /
          static_cast<std::size_t>(bins));

  std::vector<Block> blocks;
  Block current;
  for (std::size_t k = 0; k < n; ++k) {
    const auto i = static_cast<Eigen::Index>(order[k]);
    current.sum += labels[order[k]];
    current.count += 1.0;
    current.upper_edge = scores[i];
    const bool run_continues =
        k + 1 < n && scores[static_cast<Eigen::Index>(order[k + 1])] ==
                         scores[i];
    if (current.count >= static_cast<double>(target_size) && !run_continues) {
      blocks.push_back(current);
      current = Block{};
    }
  }
  if (current.count > 0.0) {
    if (!blocks.empty() &&
        current.count < 0.5 * static_cast<double>(target_size)) {
      blocks.back().sum += current.sum;
      blocks.back().count += current.count;
      blocks.back().upper_edge = current.upper_edge;
    } else {
      blocks.push_back(current);
    }
  }

  std::vector<Block> pooled;
  for (const auto& block : blocks) {
    pooled.push_back(block);
    while (pooled.size() > 1 &&
           pooled[pooled.size() - 2].mean() > pooled.back().mean()) {
      Block merged = pooled.back();
      pooled.pop_back();
      pooled.back().sum += merged.sum;
      pooled.back().count += merged.count;
      pooled.back().upper_edge = merged.upper_edge;
    }
  }
  return pooled;
}

CCNNoise RatesFromPosterior(const Eigen::VectorXd& eta,
                            const EstimatorConfig& config, bool& clamped) {
  std::vector<double> values(eta.data(), eta.data() + eta.size());
  const double low = SampleQuantile(values, config.low_quantile);
  const double high = SampleQuantile(std::move(values), config.high_quantile);
  double rho_minus = std::max(0.0, low);
  double rho_plus = std::max(0.0, 1.0 - high);
  const double total = rho_plus + rho_minus;
  clamped = total >= config.max_total_rate;
  if (clamped) {
    const double shrink = config.max_total_rate / total;
    rho_plus *= shrink;
    rho_minus *= shrink;
    // Rounding can leave the sum a hair above the target.
    while (rho_plus + rho_minus >= 1.0) {
      rho_plus = std::nextafter(rho_plus, 0.0);
      rho_minus = std::nextafter(rho_minus, 0.0);
    }
  }
  return CCNNoise(rho_plus, rho_minus);
}

void RequireBothGroups(const Dataset& data, const char* what) {
  if (data.Count(Slice::Group(0)) == 0 || data.Count(Slice::Group(1)) == 0) {
    throw Error(ErrorCode::kEmptySlice,
                std::string(what) + " lacks one of the apparent groups");
  }
}

}  // namespace

PosteriorModel::PosteriorModel(LinearScorer linear, bool uses_target,
                               std::vector<double> bin_upper_edges,
                               std::vector<double> bin_values,
                               const LogisticFit& fit)
    : linear_(std::move(linear)),
      uses_target_(uses_target),
      bin_upper_edges_(std::move(bin_upper_edges)),
      bin_values_(std::move(bin_values)),
      iterations_(fit.iterations),
      final_loss_(fit.final_loss),
      converged_(fit.converged) {}

double PosteriorModel::Calibrate(double score) const {
  double p;
  if (bin_values_.empty()) {
    p = Sigmoid(score);
  } else {
    const auto it = std::lower_bound(bin_upper_edges_.begin(),
                                     bin_upper_edges_.end(), score);
    const auto k = it == bin_upper_edges_.end()
                       ? bin_values_.size() - 1
                       : static_cast<std::size_t>(it - bin_upper_edges_.begin());
    p = bin_values_[k];
  }
  return std::clamp(p, kClamp, 1.0 - kClamp);
}

double PosteriorModel::Predict(const FeatureRef& x, int target) const {
  double score = linear_.intercept + linear_.weights.head(x.size()).dot(x);
  if (uses_target_) score += linear_.weights[x.size()] * target;
  return Calibrate(score);
}

Eigen::VectorXd PosteriorModel::RankScores(const Dataset& data) const {
  return linear_.ScoreAll(DesignMatrix(data, uses_target_));
}

Eigen::VectorXd PosteriorModel::PredictAll(const Dataset& data) const {
  Eigen::VectorXd scores = RankScores(data);
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    scores[i] = Calibrate(scores[i]);
  }
  return scores;
}

PosteriorModel fit_posterior(const Dataset& data, bool condition_on_y1,
                             const PosteriorConfig& config) {
  RequireNonEmpty(data);
  const Dataset sample =
      condition_on_y1 ? data.Filter(Slice::Label(1)) : data;
  if (sample.empty()) {
    throw Error(ErrorCode::kEmptySlice, "Y=1 slice is empty");
  }
  const bool uses_target = !condition_on_y1;
  const FeatureMatrix x = DesignMatrix(sample, uses_target);
  const LogisticFit fit =
      fit_logistic(x, sample.sensitive(), config.logistic);

  std::vector<double> edges;
  std::vector<double> values;
  if (config.calibration_bins > 0) {
    const Eigen::VectorXd scores = fit.scorer.ScoreAll(x);
    for (const auto& block :
         CalibrationBlocks(scores, sample.sensitive(), config.calibration_bins,
                           config.min_bin_size)) {
      edges.push_back(block.upper_edge);
      values.push_back(block.mean());
    }
  }
  return PosteriorModel(fit.scorer, uses_target, std::move(edges),
                        std::move(values), fit);
}

double SampleQuantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "quantile of an empty sample");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "quantile level outside [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

CCNEstimate estimate_ccn_rates(const Dataset& data,
                               const EstimatorConfig& config) {
  RequireNonEmpty(data);
  RequireBothGroups(data, "dataset");
  const PosteriorModel model = fit_posterior(data, false, config.posterior);
  CCNEstimate estimate;
  estimate.rates =
      RatesFromPosterior(model.PredictAll(data), config, estimate.clamped);
  estimate.corrupted_base_rate = data.BaseRate();
  return estimate;
}

EOEstimate estimate_eo_rates(const Dataset& data,
                             const EstimatorConfig& config) {
  RequireNonEmpty(data);
  const Dataset positives = data.Filter(Slice::Label(1));
  if (positives.empty()) throw Error(ErrorCode::kEmptySlice, "no Y=1 rows");
  RequireBothGroups(positives, "Y=1 slice");
  const PosteriorModel model = fit_posterior(positives, true, config.posterior);
  EOEstimate estimate;
  estimate.slice_rates = RatesFromPosterior(model.PredictAll(positives), config,
                                            estimate.clamped);
  estimate.slice_base_rate = positives.BaseRate();
  const MCConversion mc =
      ccn_to_mc_from_corrupted(estimate.slice_rates, estimate.slice_base_rate);
  estimate.noise =
      EOConditionalNoise(mc.noise.alpha(), mc.noise.beta());
  return estimate;
}

}  // namespace fairnoise
