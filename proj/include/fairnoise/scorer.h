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

#ifndef FAIRNOISE_SCORER_H_
#define FAIRNOISE_SCORER_H_

#include <functional>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"

namespace fairnoise {

using FeatureRef = Eigen::Ref<const Eigen::VectorXd>;

// Any deterministic map from a feature vector to a real score.
using Scorer = std::function<double(const FeatureRef&)>;

// c_f(x): a score of exactly zero predicts class 0.
inline int PredictFromScore(double score) { return score > 0.0 ? 1 : 0; }

// f(x) = <w, x> + b.
struct LinearScorer {
  Eigen::VectorXd weights;
  double intercept = 0.0;

  double operator()(const FeatureRef& x) const {
    return weights.dot(x) + intercept;
  }

  Eigen::VectorXd ScoreAll(const FeatureMatrix& x) const {
    return (x * weights).array() + intercept;
  }
};

Eigen::VectorXd ScoreAll(const Scorer& scorer, const FeatureMatrix& x);
BitVector PredictAll(const Scorer& scorer, const Dataset& data);

}  // namespace fairnoise

#endif  // FAIRNOISE_SCORER_H_
