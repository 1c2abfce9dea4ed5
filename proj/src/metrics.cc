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

#include "fairnoise/metrics.h"

#include <cmath>
#include <string>

#include "fairnoise/error.h"
#include "fairnoise/summation.h"

namespace fairnoise {
namespace {

std::string SliceName(const Slice& slice) {
  std::string name = "slice(";
  name += slice.sensitive ? "A=" + std::to_string(*slice.sensitive) : "A=*";
  name += ",";
  name += slice.target ? "Y=" + std::to_string(*slice.target) : "Y=*";
  return name + ")";
}

void CheckPredictions(const Dataset& data,
                      std::span<const std::uint8_t> predictions) {
  if (predictions.size() != static_cast<std::size_t>(data.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "prediction count does not match dataset size");
  }
}

}  // namespace

FairnessSpec FairnessSpec::Default(Criterion criterion, double tolerance) {
  return {criterion,
          criterion == Criterion::kDemographicParity
              ? FairnessLoss::kPredictNonPositive
              : FairnessLoss::kZeroOne,
          tolerance};
}

bool FairnessSpec::IsDefaultPairing() const {
  return loss == Default(criterion, tolerance).loss;
}

void FairnessSpec::Validate() const {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  }
}

FairnessSpec FairnessSpec::WithTolerance(double tau) const {
  FairnessSpec copy = *this;
  copy.tolerance = tau;
  return copy;
}

std::string_view CriterionName(Criterion criterion) {
  return criterion == Criterion::kDemographicParity ? "dp" : "eo";
}

Criterion ParseCriterion(std::string_view name) {
  if (name == "dp" || name == "DP") return Criterion::kDemographicParity;
  if (name == "eo" || name == "EO") return Criterion::kEqualOpportunity;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown criterion '" + std::string(name) + "'");
}

std::string_view FairnessLossName(FairnessLoss loss) {
  return loss == FairnessLoss::kPredictNonPositive ? "predict_nonpositive"
                                                   : "zero_one";
}

FairnessLoss ParseFairnessLoss(std::string_view name) {
  if (name == "predict_nonpositive") return FairnessLoss::kPredictNonPositive;
  if (name == "zero_one") return FairnessLoss::kZeroOne;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown fairness loss '" + std::string(name) + "'");
}

Slice CriterionSlice(Criterion criterion, int a) {
  return criterion == Criterion::kDemographicParity ? Slice::Group(a)
                                                    : Slice::Cell(a, 1);
}

// Losses are 0/1, so dataset means are ratios of exact integer counts.
double mean_fairness_loss(const Dataset& data,
                          std::span<const std::uint8_t> predictions,
                          const Slice& slice, FairnessLoss loss) {
  CheckPredictions(data, predictions);
  const auto& a = data.sensitive();
  const auto& y = data.target();
  long members = 0;
  long charged = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (!slice.Contains(a[i], y[i])) continue;
    ++members;
    if (FairnessLossValue(loss, predictions[i], y[i]) != 0.0) ++charged;
  }
  if (members == 0) {
    throw Error(ErrorCode::kEmptySlice, SliceName(slice) + " is empty");
  }
  return static_cast<double>(charged) / static_cast<double>(members);
}

double mean_fairness_loss(const Dataset& data, const Slice& slice,
                          const Scorer& scorer, FairnessLoss loss) {
  return mean_fairness_loss(data, PredictAll(scorer, data), slice, loss);
}

double mean_fairness_loss(const DiscretePopulation& pop, const Slice& slice,
                          const Scorer& scorer, FairnessLoss loss) {
  NeumaierSum mass;
  NeumaierSum charged;
  for (const auto& cell : pop.cells()) {
    if (!slice.Contains(cell.sensitive, cell.target)) continue;
    mass.Add(cell.mass);
    const int prediction = PredictFromScore(scorer(cell.features));
    charged.Add(cell.mass * FairnessLossValue(loss, prediction, cell.target));
  }
  if (!(mass.value() > 0.0)) {
    throw Error(ErrorCode::kEmptySlice, SliceName(slice) + " has zero mass");
  }
  return charged.value() / mass.value();
}

double ddp(const Dataset& data, std::span<const std::uint8_t> predictions,
           FairnessLoss loss) {
  return std::abs(
      mean_fairness_loss(data, predictions, Slice::Group(0), loss) -
      mean_fairness_loss(data, predictions, Slice::Group(1), loss));
}

double ddp(const Dataset& data, const Scorer& scorer, FairnessLoss loss) {
  return ddp(data, PredictAll(scorer, data), loss);
}

double ddp(const DiscretePopulation& pop, const Scorer& scorer,
           FairnessLoss loss) {
  return std::abs(mean_fairness_loss(pop, Slice::Group(0), scorer, loss) -
                  mean_fairness_loss(pop, Slice::Group(1), scorer, loss));
}

double deo(const Dataset& data, std::span<const std::uint8_t> predictions,
           FairnessLoss loss) {
  return std::abs(
      mean_fairness_loss(data, predictions, Slice::Cell(0, 1), loss) -
      mean_fairness_loss(data, predictions, Slice::Cell(1, 1), loss));
}

double deo(const Dataset& data, const Scorer& scorer, FairnessLoss loss) {
  return deo(data, PredictAll(scorer, data), loss);
}

double deo(const DiscretePopulation& pop, const Scorer& scorer,
           FairnessLoss loss) {
  return std::abs(mean_fairness_loss(pop, Slice::Cell(0, 1), scorer, loss) -
                  mean_fairness_loss(pop, Slice::Cell(1, 1), scorer, loss));
}

double signed_disparity(const Dataset& data,
                        std::span<const std::uint8_t> predictions,
                        const FairnessSpec& spec) {
  return mean_fairness_loss(data, predictions,
                            CriterionSlice(spec.criterion, 0), spec.loss) -
         mean_fairness_loss(data, predictions,
                            CriterionSlice(spec.criterion, 1), spec.loss);
}

double disparity(const Dataset& data,
                 std::span<const std::uint8_t> predictions,
                 const FairnessSpec& spec) {
  return std::abs(signed_disparity(data, predictions, spec));
}

double disparity(const Dataset& data, const Scorer& scorer,
                 const FairnessSpec& spec) {
  return disparity(data, PredictAll(scorer, data), spec);
}

double accuracy_risk(const Dataset& data,
                     std::span<const std::uint8_t> predictions) {
  RequireNonEmpty(data);
  CheckPredictions(data, predictions);
  long wrong = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (predictions[i] != data.target()[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

double accuracy_risk(const Dataset& data, const Scorer& scorer) {
  RequireNonEmpty(data);
  return accuracy_risk(data, PredictAll(scorer, data));
}

double accuracy_risk(const DiscretePopulation& pop, const Scorer& scorer) {
  NeumaierSum wrong;
  for (const auto& cell : pop.cells()) {
    if (PredictFromScore(scorer(cell.features)) != cell.target) {
      wrong.Add(cell.mass);
    }
  }
  return wrong.value();
}

}  // namespace fairnoise
