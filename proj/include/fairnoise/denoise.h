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

#ifndef FAIRNOISE_DENOISE_H_
#define FAIRNOISE_DENOISE_H_

#include "fairnoise/dataset.h"
#include "fairnoise/estimation.h"
#include "fairnoise/noise.h"

namespace fairnoise {

// Simplified confidence-rank denoiser. Unlike RankPrune it relabels rather
// than prunes and reweights; outputs label it "denoise (simplified)".
inline constexpr const char* kDenoiseLabel = "denoise (simplified)";

struct DenoiseConfig {
  PosteriorConfig posterior;
};

struct DenoiseReport {
  long relabeled_to_zero = 0;  // apparent A=1 -> 0
  long relabeled_to_one = 0;   // apparent A=0 -> 1
  double fraction_relabeled = 0.0;
  // An entire apparent group was relabeled.
  bool whole_group_relabeled = false;
};

struct DenoiseResult {
  Dataset data;
  DenoiseReport report;
};

// Within apparent A=1, the ceil(rho+ |A=1|) least likely members become A=0;
// within apparent A=0, the ceil(rho- |A=0|) most likely members become A=1.
// Ranking uses the posterior score; ties go to the lower original index.
DenoiseResult denoise_ccn(const Dataset& data, const CCNNoise& rates,
                          const DenoiseConfig& config = {});

}  // namespace fairnoise

#endif  // FAIRNOISE_DENOISE_H_
