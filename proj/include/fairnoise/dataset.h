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

#ifndef FAIRNOISE_DATASET_H_
#define FAIRNOISE_DATASET_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fairnoise {

// Row-major so that a single example is a contiguous vector.
using FeatureMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using BitVector = std::vector<std::uint8_t>;

struct LabeledExample {
  Eigen::VectorXd features;
  int sensitive = 0;
  int target = 0;
};

// Conditioning event on (A, Y); an empty optional leaves that bit free.
struct Slice {
  std::optional<int> sensitive;
  std::optional<int> target;

  static Slice All() { return {}; }
  static Slice Group(int a) { return {a, std::nullopt}; }
  static Slice Label(int y) { return {std::nullopt, y}; }
  static Slice Cell(int a, int y) { return {a, y}; }

  bool Contains(int a, int y) const {
    return (!sensitive || *sensitive == a) && (!target || *target == y);
  }
};

// Empirical sample of (features, sensitive bit, target bit) triplets.
// Immutable after construction.
class Dataset {
 public:
  explicit Dataset(Eigen::Index dimension = 1);
  Dataset(FeatureMatrix features, BitVector sensitive, BitVector target);

  static Dataset FromExamples(std::span<const LabeledExample> examples,
                              Eigen::Index dimension);

  Eigen::Index size() const { return features_.rows(); }
  Eigen::Index dimension() const { return features_.cols(); }
  bool empty() const { return size() == 0; }

  const FeatureMatrix& features() const { return features_; }
  const BitVector& sensitive() const { return sensitive_; }
  const BitVector& target() const { return target_; }

  LabeledExample example(Eigen::Index i) const;

  Eigen::Index Count(const Slice& slice) const;

  // P̂[A = 1]. Errors on an empty dataset.
  double BaseRate() const;
  // P̂[Y = 1 | A = a]. Errors when the group is absent.
  double TargetRate(int a) const;

  // Same features and targets with a replaced sensitive column.
  Dataset WithSensitive(BitVector sensitive) const;
  Dataset Subset(std::span<const Eigen::Index> rows) const;
  Dataset Filter(const Slice& slice) const;

 private:
  FeatureMatrix features_;
  BitVector sensitive_;
  BitVector target_;
};

// Throws kEmptyDataset when `data` is empty.
void RequireNonEmpty(const Dataset& data);

}  // namespace fairnoise

#endif  // FAIRNOISE_DATASET_H_
