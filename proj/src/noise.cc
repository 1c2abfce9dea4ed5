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

#include "fairnoise/noise.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "fairnoise/error.h"
#include "fairnoise/rng.h"
#include "fairnoise/summation.h"

namespace fairnoise {
namespace {

void CheckPair(double first, double second, const char* what) {
  const bool in_range = first >= 0.0 && first < 1.0 && second >= 0.0 &&
                        second < 1.0 && first + second < 1.0;
  if (!in_range) {
    throw Error(ErrorCode::kInvalidNoise,
                std::string(what) + " (" + std::to_string(first) + ", " +
                    std::to_string(second) +
                    ") must lie in [0,1) with sum < 1");
  }
}

void CheckUnitOpen(double value, ErrorCode code, const char* what) {
  if (!(value > 0.0 && value < 1.0)) {
    throw Error(code, std::string(what) + " = " + std::to_string(value) +
                          " is outside (0, 1)");
  }
}

void CheckTau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  }
}

}  // namespace

MCNoise::MCNoise(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  CheckPair(alpha, beta, "MC noise (alpha, beta)");
}

CCNNoise::CCNNoise(double rho_plus, double rho_minus)
    : rho_plus_(rho_plus), rho_minus_(rho_minus) {
  CheckPair(rho_plus, rho_minus, "CCN noise (rho+, rho-)");
}

EOConditionalNoise::EOConditionalNoise(double alpha_prime, double beta_prime)
    : alpha_prime_(alpha_prime), beta_prime_(beta_prime) {
  CheckPair(alpha_prime, beta_prime, "EO noise (alpha', beta')");
}

InjectionResult inject_ccn_traced(const Dataset& data, const CCNNoise& noise,
                                  std::uint64_t seed) {
  Rng rng(seed);
  BitVector sensitive = data.sensitive();
  BitVector flipped(sensitive.size(), 0);
  long to_zero = 0;
  long to_one = 0;
  for (std::size_t i = 0; i < sensitive.size(); ++i) {
    const double u = rng.Uniform();
    if (sensitive[i] == 1) {
      if (u < noise.rho_plus()) {
        sensitive[i] = 0;
        flipped[i] = 1;
        ++to_zero;
      }
    } else if (u < noise.rho_minus()) {
      sensitive[i] = 1;
      flipped[i] = 1;
      ++to_one;
    }
  }
  return {data.WithSensitive(std::move(sensitive)), std::move(flipped),
          to_zero, to_one};
}

Dataset inject_ccn(const Dataset& data, const CCNNoise& noise,
                   std::uint64_t seed) {
  return inject_ccn_traced(data, noise, seed).data;
}

Dataset inject_pu(const Dataset& data, double rho_minus, std::uint64_t seed) {
  return inject_ccn(data, CCNNoise(0.0, rho_minus), seed);
}

DiscretePopulation corrupt_population(const DiscretePopulation& pop,
                                      const MCNoise& noise,
                                      double target_base_rate) {
  CheckUnitOpen(target_base_rate, ErrorCode::kInvalidBaseRate,
                "corrupted base rate");
  const double group1 = pop.SliceMass(Slice::Group(1));
  const double group0 = pop.SliceMass(Slice::Group(0));
  if (!(group1 > 0.0) || !(group0 > 0.0)) {
    throw Error(ErrorCode::kEmptySlice,
                "population needs positive mass in both groups");
  }
  const double alpha = noise.alpha();
  const double beta = noise.beta();
  const double pi_corr = target_base_rate;

  // Mass a clean cell of group `a` contributes to corrupted group `a_corr`.
  auto corrupted_mass = [&](int a, int a_corr, double mass) {
    if (a == 1) {
      const double conditional = mass / group1;
      return a_corr == 1 ? pi_corr * (1.0 - alpha) * conditional
                         : (1.0 - pi_corr) * beta * conditional;
    }
    const double conditional = mass / group0;
    return a_corr == 1 ? pi_corr * alpha * conditional
                       : (1.0 - pi_corr) * (1.0 - beta) * conditional;
  };

  std::vector<PopulationCell> cells;
  cells.reserve(2 * pop.size());
  NeumaierSum total;
  for (const auto& cell : pop.cells()) {
    for (const int a_corr : {cell.sensitive, 1 - cell.sensitive}) {
      const double mass = corrupted_mass(cell.sensitive, a_corr, cell.mass);
      if (mass <= 0.0) continue;
      cells.push_back({cell.features, a_corr, cell.target, mass});
      total.Add(mass);
    }
  }
  const double norm = total.value();
  for (auto& cell : cells) cell.mass /= norm;
  return DiscretePopulation(std::move(cells));
}

MCConversion ccn_to_mc(const CCNNoise& noise, double pi_a) {
  CheckUnitOpen(pi_a, ErrorCode::kInvalidBaseRate, "base rate");
  const double rho_plus = noise.rho_plus();
  const double rho_minus = noise.rho_minus();
  const double pi_corr = (1.0 - rho_plus) * pi_a + rho_minus * (1.0 - pi_a);
  if (!(pi_corr > 0.0 && pi_corr < 1.0)) {
    throw Error(ErrorCode::kDegenerateBaseRate,
                "corrupted base rate " + std::to_string(pi_corr) +
                    " is outside (0, 1)");
  }
  const double alpha = rho_minus * (1.0 - pi_a) / pi_corr;
  const double beta = rho_plus * pi_a / (1.0 - pi_corr);
  return {MCNoise(alpha, beta), pi_corr};
}

MCConversion ccn_to_mc_from_corrupted(const CCNNoise& noise,
                                      double corrupted_base_rate) {
  CheckUnitOpen(corrupted_base_rate, ErrorCode::kInvalidBaseRate,
                "corrupted base rate");
  const double pi_a = (corrupted_base_rate - noise.rho_minus()) /
                      (1.0 - noise.rho_plus() - noise.rho_minus());
  if (!(pi_a > 0.0 && pi_a < 1.0)) {
    throw Error(ErrorCode::kDegenerateBaseRate,
                "noise rates imply clean base rate " + std::to_string(pi_a) +
                    " outside (0, 1) for corrupted base rate " +
                    std::to_string(corrupted_base_rate));
  }
  MCConversion out = ccn_to_mc(noise, pi_a);
  out.corrupted_base_rate = corrupted_base_rate;
  return out;
}

EOConditionalNoise mc_to_eo(const MCNoise& noise, double p_y1_given_a1,
                            double p_y1_given_a0) {
  for (const double p : {p_y1_given_a1, p_y1_given_a0}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "conditional base rate outside [0, 1]");
    }
  }
  const double alpha = noise.alpha();
  const double beta = noise.beta();
  const double denom_alpha =
      (1.0 - alpha) * p_y1_given_a1 + alpha * p_y1_given_a0;
  const double denom_beta = beta * p_y1_given_a1 + (1.0 - beta) * p_y1_given_a0;
  if (!(denom_alpha > 0.0) || !(denom_beta > 0.0)) {
    throw Error(ErrorCode::kDegenerateConditional,
                "a corrupted group has no Y=1 mass");
  }
  return EOConditionalNoise(alpha * p_y1_given_a0 / denom_alpha,
                            beta * p_y1_given_a1 / denom_beta);
}

double scale_tolerance(double tau, const MCNoise& noise) {
  CheckTau(tau);
  return tau * noise.Scale();
}

double scale_tolerance(double tau, const EOConditionalNoise& noise) {
  CheckTau(tau);
  return tau * noise.Scale();
}

double dp_rho_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEpsilon,
                "epsilon must be positive, got " + std::to_string(epsilon));
  }
  return 1.0 / (std::exp(epsilon) + 1.0);
}

double dp_epsilon_for_rho(double rho) {
  if (!(rho > 0.0 && rho < 0.5)) {
    throw Error(ErrorCode::kOutOfRangeRho,
                "rho must lie in (0, 0.5), got " + std::to_string(rho));
  }
  return std::log1p(-rho) - std::log(rho);
}

}  // namespace fairnoise
