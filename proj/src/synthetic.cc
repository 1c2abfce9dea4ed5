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

#include "fairnoise/synthetic.h"

#include <cmath>
#include <string>

#include "fairnoise/error.h"
#include "fairnoise/rng.h"

namespace fairnoise {

void SyntheticConfig::Validate() const {
  double total = 0.0;
  for (const double p : proportions) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "negative cell proportion");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "cell proportions sum to " + std::to_string(total));
  }
  if (!(variance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "variance must be positive");
  }
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  const Eigen::Index d = means[0].size();
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "empty cell mean");
  for (const auto& m : means) {
    if (m.size() != d) {
      throw Error(ErrorCode::kInvalidArgument, "cell means differ in length");
    }
  }
}

SyntheticConfig SyntheticConfig::Default() {
  SyntheticConfig config;
  // Features: label signal, group signal, and a blend of both.
  config.means[SyntheticCell(0, 0)] = Eigen::Vector3d(-1.0, -1.0, -1.0);
  config.means[SyntheticCell(0, 1)] = Eigen::Vector3d(1.0, -1.0, 0.0);
  config.means[SyntheticCell(1, 0)] = Eigen::Vector3d(-1.0, 1.0, 0.0);
  config.means[SyntheticCell(1, 1)] = Eigen::Vector3d(1.0, 1.0, 1.0);
  config.variance = 1.0;
  const double pi_a = 0.85;
  const double rate0 = 0.55;
  const double rate1 = 0.95;
  config.proportions = {(1.0 - pi_a) * (1.0 - rate0), (1.0 - pi_a) * rate0,
                        pi_a * (1.0 - rate1), pi_a * rate1};
  config.n = 4000;
  config.seed = 20200607;
  return config;
}

SyntheticConfig SyntheticConfig::HighDisparity() {
  SyntheticConfig config = Default();
  const double pi_a = 0.5;
  const double rate0 = 0.2;
  const double rate1 = 0.8;
  config.proportions = {(1.0 - pi_a) * (1.0 - rate0), (1.0 - pi_a) * rate0,
                        pi_a * (1.0 - rate1), pi_a * rate1};
  return config;
}

Dataset synth_generate(const SyntheticConfig& config) {
  config.Validate();
  Rng rng(config.seed);
  const Eigen::Index d = config.means[0].size();
  const double sd = std::sqrt(config.variance);
  FeatureMatrix x(config.n, d);
  BitVector a(static_cast<std::size_t>(config.n));
  BitVector y(static_cast<std::size_t>(config.n));
  for (long i = 0; i < config.n; ++i) {
    const double u = rng.Uniform();
    int cell = 3;
    double cumulative = 0.0;
    for (int c = 0; c < 4; ++c) {
      cumulative += config.proportions[static_cast<std::size_t>(c)];
      if (u < cumulative) {
        cell = c;
        break;
      }
    }
    // Rounding in the cumulative sum must not land on a zero-weight cell.
    while (config.proportions[static_cast<std::size_t>(cell)] == 0.0) --cell;
    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cell / 2);
    y[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cell % 2);
    const auto& mean = config.means[static_cast<std::size_t>(cell)];
    for (Eigen::Index j = 0; j < d; ++j) {
      x(i, j) = mean[j] + sd * rng.Normal();
    }
  }
  return Dataset(std::move(x), std::move(a), std::move(y));
}

Dataset anchor_generate(const AnchorConfig& config) {
  if (config.n < 1 || !(config.base_rate > 0.0 && config.base_rate < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "bad anchor configuration");
  }
  Rng rng(config.seed);
  FeatureMatrix x(config.n, 2);
  BitVector a(static_cast<std::size_t>(config.n));
  BitVector y(static_cast<std::size_t>(config.n));
  for (long i = 0; i < config.n; ++i) {
    const int group = rng.Bernoulli(config.base_rate) ? 1 : 0;
    const int label =
        rng.Bernoulli(config.target_rate[static_cast<std::size_t>(group)]) ? 1
                                                                           : 0;
    const double lo = group == 1 ? -1.0 : -3.0;
    x(i, 0) = lo + 4.0 * rng.Uniform();
    x(i, 1) = label + rng.Normal();
    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(group);
    y[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(label);
  }
  return Dataset(std::move(x), std::move(a), std::move(y));
}

}  // namespace fairnoise
