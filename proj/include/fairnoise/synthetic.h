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

#ifndef FAIRNOISE_SYNTHETIC_H_
#define FAIRNOISE_SYNTHETIC_H_

#include <array>
#include <cstdint>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"

namespace fairnoise {

// Cell index of (A, Y): 0 = (0,0), 1 = (0,1), 2 = (1,0), 3 = (1,1).
constexpr int SyntheticCell(int a, int y) { return 2 * a + y; }

// Per-(A,Y)-cell Gaussian features with a shared diagonal variance.
struct SyntheticConfig {
  std::array<Eigen::VectorXd, 4> means;
  double variance = 1.0;
  std::array<double, 4> proportions = {0.25, 0.25, 0.25, 0.25};
  long n = 4000;
  std::uint64_t seed = 1;

  void Validate() const;

  // Benchmark default: a minority group (P[A=1] = 0.85, so A=0 is 15%) with
  // P[Y=1|A=1] = 0.95 and P[Y=1|A=0] = 0.55. An unconstrained logistic fit has
  // DDP around 0.35, so the constraint binds over the usual tau grid.
  static SyntheticConfig Default();
  // Stronger group-label correlation for constraint-tightness tests.
  static SyntheticConfig HighDisparity();
};

// Draws n examples cell-first (one uniform per example against the
// cumulative proportions) and then Gaussian features.
Dataset synth_generate(const SyntheticConfig& config);

// Estimator test family with exact anchor regions: feature 0 is uniform on
// [-1, 3] for A=1 and on [-3, 1] for A=0, so P[A=1|x] is 0 below -1 and 1
// above 1. Feature 1 is N(y, 1) with P[Y=1|A=a] = target_rate[a].
struct AnchorConfig {
  double base_rate = 0.5;
  std::array<double, 2> target_rate = {0.4, 0.6};
  long n = 20000;
  std::uint64_t seed = 1;
};

Dataset anchor_generate(const AnchorConfig& config);

}  // namespace fairnoise

#endif  // FAIRNOISE_SYNTHETIC_H_
