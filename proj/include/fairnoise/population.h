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

#ifndef FAIRNOISE_POPULATION_H_
#define FAIRNOISE_POPULATION_H_

#include <vector>

#include <Eigen/Dense>

#include "fairnoise/dataset.h"

namespace fairnoise {

struct PopulationCell {
  Eigen::VectorXd features;
  int sensitive = 0;
  int target = 0;
  double mass = 0.0;
};

// Exact finite distribution over (x, a, y). Masses are nonnegative and sum to
// one within 1e-12.
class DiscretePopulation {
 public:
  static constexpr double kMassTolerance = 1e-12;

  explicit DiscretePopulation(std::vector<PopulationCell> cells);

  const std::vector<PopulationCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  Eigen::Index dimension() const { return cells_.front().features.size(); }

  double SliceMass(const Slice& slice) const;
  // P[A = 1].
  double BaseRate() const;
  // P[Y = 1 | A = a]; errors if the group has zero mass.
  double TargetRate(int a) const;

  // Expands each cell into round(mass * denominator) identical examples.
  // Every mass must be an integer multiple of 1/denominator (within 1e-9).
  Dataset Materialize(long denominator) const;

 private:
  std::vector<PopulationCell> cells_;
};

}  // namespace fairnoise

#endif  // FAIRNOISE_POPULATION_H_
