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

#include "fairnoise/denoise.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fairnoise/error.h"

namespace fairnoise {
namespace {

// ceil(rate * size), ignoring float noise below 1e-9 examples.
long RelabelCount(double rate, long size) {
  return std::min(size, static_cast<long>(std::ceil(
                            rate * static_cast<double>(size) - 1e-9)));
}

}  // namespace

DenoiseResult denoise_ccn(const Dataset& data, const CCNNoise& rates,
                          const DenoiseConfig& config) {
  RequireNonEmpty(data);
  const long group1 = data.Count(Slice::Group(1));
  const long group0 = data.Count(Slice::Group(0));
  if (group1 == 0 || group0 == 0) {
    throw Error(ErrorCode::kEmptySlice, "denoising needs both apparent groups");
  }
  const long to_zero = RelabelCount(rates.rho_plus(), group1);
  const long to_one = RelabelCount(rates.rho_minus(), group0);
  DenoiseReport report;
  if (to_zero == 0 && to_one == 0) return {data, report};

  const Eigen::VectorXd score =
      fit_posterior(data, false, config.posterior).RankScores(data);
  std::vector<Eigen::Index> ones;
  std::vector<Eigen::Index> zeros;
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    (data.sensitive()[static_cast<std::size_t>(i)] ? ones : zeros).push_back(i);
  }
  std::stable_sort(ones.begin(), ones.end(),
                   [&](auto a, auto b) { return score[a] < score[b]; });
  std::stable_sort(zeros.begin(), zeros.end(),
                   [&](auto a, auto b) { return score[a] > score[b]; });

  BitVector sensitive = data.sensitive();
  for (long k = 0; k < to_zero; ++k) {
    sensitive[static_cast<std::size_t>(ones[static_cast<std::size_t>(k)])] = 0;
  }
  for (long k = 0; k < to_one; ++k) {
    sensitive[static_cast<std::size_t>(zeros[static_cast<std::size_t>(k)])] = 1;
  }
  report.relabeled_to_zero = to_zero;
  report.relabeled_to_one = to_one;
  report.fraction_relabeled =
      static_cast<double>(to_zero + to_one) / static_cast<double>(data.size());
  report.whole_group_relabeled = to_zero == group1 || to_one == group0;
  return {data.WithSensitive(std::move(sensitive)), report};
}

}  // namespace fairnoise
