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

#include "fairnoise/scorer.h"

namespace fairnoise {

Eigen::VectorXd ScoreAll(const Scorer& scorer, const FeatureMatrix& x) {
  Eigen::VectorXd scores(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    scores[i] = scorer(x.row(i).transpose());
  }
  return scores;
}

BitVector PredictAll(const Scorer& scorer, const Dataset& data) {
  const Eigen::VectorXd scores = ScoreAll(scorer, data.features());
  BitVector predictions(static_cast<std::size_t>(scores.size()));
  for (Eigen::Index i = 0; i < scores.size(); ++i) {
    predictions[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(PredictFromScore(scores[i]));
  }
  return predictions;
}

}  // namespace fairnoise
