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

#ifndef FAIRNOISE_LOGISTIC_H_
#define FAIRNOISE_LOGISTIC_H_

#include <cmath>
#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"
#include "fairnoise/scorer.h"

namespace fairnoise {

inline double Sigmoid(double s) {
  if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

// log(1 + exp(s)), stable for large |s|.
inline double Softplus(double s) {
  return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

// Per-column affine map to zero mean and unit variance. Constant columns are
// only centred.
struct Standardizer {
  Eigen::RowVectorXd mean;
  Eigen::RowVectorXd scale;

  static Standardizer Fit(const FeatureMatrix& x);
  FeatureMatrix Apply(const FeatureMatrix& x) const;
  // Maps a scorer on standardized features back to raw features.
  LinearScorer Unstandardize(const Eigen::VectorXd& weights,
                             double intercept) const;
};

struct LogisticConfig {
  // L2 penalty on the (standardized) weights; negative selects 1/n.
  double regularization = -1.0;
  int max_iterations = 1000;
  double gradient_tolerance = 1e-6;
};

struct LogisticFit {
  LinearScorer scorer;
  int iterations = 0;
  double final_loss = 0.0;
  double gradient_norm = 0.0;
  bool converged = false;
};

// Minimizes the (optionally weighted) mean log loss plus
// regularization/2 * |w|^2 by damped Newton steps. The intercept is not
// penalized. Deterministic.
LogisticFit fit_logistic(const FeatureMatrix& x,
                         std::span<const std::uint8_t> labels,
                         const LogisticConfig& config,
                         std::span<const double> sample_weights = {});

}  // namespace fairnoise

#endif  // FAIRNOISE_LOGISTIC_H_
