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

#ifndef FAIRNOISE_ORACLE_H_
#define FAIRNOISE_ORACLE_H_

#include "fairnoise/metrics.h"
#include "fairnoise/population.h"
#include "fairnoise/scorer.h"

namespace fairnoise {

struct OracleMetrics {
  double ddp = 0.0;
  double deo = 0.0;
  double risk = 0.0;
};

// Exact mass-weighted metrics of a scorer on a discrete population: ddp with
// the predict-non-positive loss, deo with the 0-1 loss on Y=1, and 0-1 risk.
OracleMetrics population_oracle(const DiscretePopulation& pop,
                                const Scorer& scorer);

}  // namespace fairnoise

#endif  // FAIRNOISE_ORACLE_H_
