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

#include "fairnoise/population.h"

#include <cmath>
#include <string>
#include <utility>

#include "fairnoise/error.h"
#include "fairnoise/summation.h"

namespace fairnoise {

DiscretePopulation::DiscretePopulation(std::vector<PopulationCell> cells)
    : cells_(std::move(cells)) {
  if (cells_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "population has no cells");
  }
  const Eigen::Index d = cells_.front().features.size();
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "empty feature vector");
  NeumaierSum total;
  for (const auto& cell : cells_) {
    if (cell.features.size() != d) {
      throw Error(ErrorCode::kInvalidArgument, "cell dimensions differ");
    }
    if ((cell.sensitive != 0 && cell.sensitive != 1) ||
        (cell.target != 0 && cell.target != 1)) {
      throw Error(ErrorCode::kInvalidArgument, "cell bits must be 0 or 1");
    }
    if (!(cell.mass >= 0.0) || !std::isfinite(cell.mass)) {
      throw Error(ErrorCode::kInvalidArgument, "cell mass must be >= 0");
    }
    total.Add(cell.mass);
  }
  if (std::abs(total.value() - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                "cell masses sum to " + std::to_string(total.value()));
  }
}

double DiscretePopulation::SliceMass(const Slice& slice) const {
  NeumaierSum mass;
  for (const auto& cell : cells_) {
    if (slice.Contains(cell.sensitive, cell.target)) mass.Add(cell.mass);
  }
  return mass.value();
}

double DiscretePopulation::BaseRate() const {
  return SliceMass(Slice::Group(1));
}

double DiscretePopulation::TargetRate(int a) const {
  const double group = SliceMass(Slice::Group(a));
  if (group <= 0.0) {
    throw Error(ErrorCode::kEmptySlice,
                "group A=" + std::to_string(a) + " has zero mass");
  }
  return SliceMass(Slice::Cell(a, 1)) / group;
}

Dataset DiscretePopulation::Materialize(long denominator) const {
  if (denominator < 1) {
    throw Error(ErrorCode::kInvalidArgument, "denominator must be positive");
  }
  std::vector<LabeledExample> examples;
  for (const auto& cell : cells_) {
    const double scaled = cell.mass * static_cast<double>(denominator);
    const double count = std::round(scaled);
    if (std::abs(scaled - count) > 1e-9) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cell mass is not a multiple of 1/" +
                      std::to_string(denominator));
    }
    for (long k = 0; k < static_cast<long>(count); ++k) {
      examples.push_back({cell.features, cell.sensitive, cell.target});
    }
  }
  return Dataset::FromExamples(examples, dimension());
}

}  // namespace fairnoise
