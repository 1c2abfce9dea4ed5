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

#ifndef FAIRNOISE_METRICS_H_
#define FAIRNOISE_METRICS_H_

#include <span>
#include <string_view>

#include "fairnoise/dataset.h"
#include "fairnoise/population.h"
#include "fairnoise/scorer.h"

namespace fairnoise {

enum class Criterion { kDemographicParity, kEqualOpportunity };

// ℓ̄(s, y). kPredictNonPositive charges 1[c_f(x) != 1]; kZeroOne charges
// 1[c_f(x) != y].
enum class FairnessLoss { kPredictNonPositive, kZeroOne };

struct FairnessSpec {
  Criterion criterion = Criterion::kDemographicParity;
  FairnessLoss loss = FairnessLoss::kPredictNonPositive;
  double tolerance = 0.0;

  // DP pairs with kPredictNonPositive and EO with kZeroOne.
  static FairnessSpec Default(Criterion criterion, double tolerance);

  bool IsDefaultPairing() const;
  // Throws kInvalidArgument for a negative or non-finite tolerance.
  void Validate() const;
  FairnessSpec WithTolerance(double tau) const;
};

std::string_view CriterionName(Criterion criterion);
Criterion ParseCriterion(std::string_view name);
std::string_view FairnessLossName(FairnessLoss loss);
FairnessLoss ParseFairnessLoss(std::string_view name);

inline double FairnessLossValue(FairnessLoss loss, int prediction,
                                int target) {
  return loss == FairnessLoss::kPredictNonPositive
             ? (prediction != 1 ? 1.0 : 0.0)
             : (prediction != target ? 1.0 : 0.0);
}

// The two slices a criterion compares: group A=0 and group A=1, restricted to
// Y=1 for equal opportunity.
Slice CriterionSlice(Criterion criterion, int a);

// L̄ over a slice. Throws kEmptySlice for an empty or zero-mass slice.
double mean_fairness_loss(const Dataset& data, const Slice& slice,
                          const Scorer& scorer, FairnessLoss loss);
double mean_fairness_loss(const Dataset& data,
                          std::span<const std::uint8_t> predictions,
                          const Slice& slice, FairnessLoss loss);
double mean_fairness_loss(const DiscretePopulation& pop, const Slice& slice,
                          const Scorer& scorer, FairnessLoss loss);

double ddp(const Dataset& data, const Scorer& scorer,
           FairnessLoss loss = FairnessLoss::kPredictNonPositive);
double ddp(const Dataset& data, std::span<const std::uint8_t> predictions,
           FairnessLoss loss = FairnessLoss::kPredictNonPositive);
double ddp(const DiscretePopulation& pop, const Scorer& scorer,
           FairnessLoss loss = FairnessLoss::kPredictNonPositive);

double deo(const Dataset& data, const Scorer& scorer,
           FairnessLoss loss = FairnessLoss::kZeroOne);
double deo(const Dataset& data, std::span<const std::uint8_t> predictions,
           FairnessLoss loss = FairnessLoss::kZeroOne);
double deo(const DiscretePopulation& pop, const Scorer& scorer,
           FairnessLoss loss = FairnessLoss::kZeroOne);

// Signed difference L̄(group 0) - L̄(group 1) for the spec's criterion.
double signed_disparity(const Dataset& data,
                        std::span<const std::uint8_t> predictions,
                        const FairnessSpec& spec);
// ddp or deo, as selected by the spec.
double disparity(const Dataset& data, const Scorer& scorer,
                 const FairnessSpec& spec);
double disparity(const Dataset& data,
                 std::span<const std::uint8_t> predictions,
                 const FairnessSpec& spec);

double accuracy_risk(const Dataset& data, const Scorer& scorer);
double accuracy_risk(const Dataset& data,
                     std::span<const std::uint8_t> predictions);
double accuracy_risk(const DiscretePopulation& pop, const Scorer& scorer);

}  // namespace fairnoise

#endif  // FAIRNOISE_METRICS_H_
