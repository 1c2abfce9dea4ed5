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

#include "fairnoise/dataset.h"

#include <string>
#include <utility>

#include "fairnoise/error.h"

namespace fairnoise {
namespace {

void CheckBits(const BitVector& bits, const char* name) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " bit at row " + std::to_string(i) +
                      " is not 0 or 1");
    }
  }
}

}  // namespace

Dataset::Dataset(Eigen::Index dimension) : features_(0, dimension) {
  if (dimension < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  }
}

Dataset::Dataset(FeatureMatrix features, BitVector sensitive, BitVector target)
    : features_(std::move(features)),
      sensitive_(std::move(sensitive)),
      target_(std::move(target)) {
  if (features_.cols() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  }
  const auto n = static_cast<std::size_t>(features_.rows());
  if (sensitive_.size() != n || target_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "feature rows, sensitive and target lengths differ");
  }
  CheckBits(sensitive_, "sensitive");
  CheckBits(target_, "target");
}

Dataset Dataset::FromExamples(std::span<const LabeledExample> examples,
                              Eigen::Index dimension) {
  FeatureMatrix x(static_cast<Eigen::Index>(examples.size()), dimension);
  BitVector a(examples.size());
  BitVector y(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& ex = examples[i];
    if (ex.features.size() != dimension) {
      throw Error(ErrorCode::kInvalidArgument,
                  "example " + std::to_string(i) + " has dimension " +
                      std::to_string(ex.features.size()) + ", expected " +
                      std::to_string(dimension));
    }
    if ((ex.sensitive != 0 && ex.sensitive != 1) ||
        (ex.target != 0 && ex.target != 1)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "example " + std::to_string(i) + " has a non-binary bit");
    }
    x.row(static_cast<Eigen::Index>(i)) = ex.features.transpose();
    a[i] = static_cast<std::uint8_t>(ex.sensitive);
    y[i] = static_cast<std::uint8_t>(ex.target);
  }
  return Dataset(std::move(x), std::move(a), std::move(y));
}

LabeledExample Dataset::example(Eigen::Index i) const {
  const auto k = static_cast<std::size_t>(i);
  return {features_.row(i).transpose(), sensitive_[k], target_[k]};
}

Eigen::Index Dataset::Count(const Slice& slice) const {
  Eigen::Index count = 0;
  for (std::size_t i = 0; i < sensitive_.size(); ++i) {
    if (slice.Contains(sensitive_[i], target_[i])) ++count;
  }
  return count;
}

double Dataset::BaseRate() const {
  RequireNonEmpty(*this);
  return static_cast<double>(Count(Slice::Group(1))) /
         static_cast<double>(size());
}

double Dataset::TargetRate(int a) const {
  const Eigen::Index group = Count(Slice::Group(a));
  if (group == 0) {
    throw Error(ErrorCode::kEmptySlice,
                "group A=" + std::to_string(a) + " is absent");
  }
  return static_cast<double>(Count(Slice::Cell(a, 1))) /
         static_cast<double>(group);
}

Dataset Dataset::WithSensitive(BitVector sensitive) const {
  return Dataset(features_, std::move(sensitive), target_);
}

Dataset Dataset::Subset(std::span<const Eigen::Index> rows) const {
  FeatureMatrix x(static_cast<Eigen::Index>(rows.size()), dimension());
  BitVector a(rows.size());
  BitVector y(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Eigen::Index r = rows[i];
    if (r < 0 || r >= size()) {
      throw Error(ErrorCode::kInvalidArgument, "subset row out of range");
    }
    x.row(static_cast<Eigen::Index>(i)) = features_.row(r);
    a[i] = sensitive_[static_cast<std::size_t>(r)];
    y[i] = target_[static_cast<std::size_t>(r)];
  }
  return Dataset(std::move(x), std::move(a), std::move(y));
}

Dataset Dataset::Filter(const Slice& slice) const {
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < sensitive_.size(); ++i) {
    if (slice.Contains(sensitive_[i], target_[i])) {
      rows.push_back(static_cast<Eigen::Index>(i));
    }
  }
  if (rows.empty()) return Dataset(dimension());
  return Subset(rows);
}

void RequireNonEmpty(const Dataset& data) {
  if (data.empty()) throw Error(ErrorCode::kEmptyDataset, "dataset is empty");
}

}  // namespace fairnoise
