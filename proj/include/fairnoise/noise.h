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

#ifndef FAIRNOISE_NOISE_H_
#define FAIRNOISE_NOISE_H_

#include <cstdint>

#include "fairnoise/dataset.h"
#include "fairnoise/population.h"

namespace fairnoise {

// Mutually contaminated noise on the sensitive attribute:
//   D_{1,.,corr} = (1 - alpha) D_{1,.} + alpha D_{0,.}
//   D_{0,.,corr} = beta D_{1,.} + (1 - beta) D_{0,.}
// with alpha, beta in [0, 1) and alpha + beta < 1.
class MCNoise {
 public:
  MCNoise() = default;
  MCNoise(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  // 1 - alpha - beta, the factor by which mean-difference scores shrink.
  double Scale() const { return 1.0 - alpha_ - beta_; }

 private:
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

// Class-conditional flips: A=1 becomes 0 with probability rho_plus, A=0
// becomes 1 with probability rho_minus. PU censoring is rho_plus == 0.
class CCNNoise {
 public:
  CCNNoise() = default;
  CCNNoise(double rho_plus, double rho_minus);

  double rho_plus() const { return rho_plus_; }
  double rho_minus() const { return rho_minus_; }

 private:
  double rho_plus_ = 0.0;
  double rho_minus_ = 0.0;
};

// The same mixture restricted to the Y=1 slice (the EO form).
class EOConditionalNoise {
 public:
  EOConditionalNoise() = default;
  EOConditionalNoise(double alpha_prime, double beta_prime);

  double alpha_prime() const { return alpha_prime_; }
  double beta_prime() const { return beta_prime_; }
  double Scale() const { return 1.0 - alpha_prime_ - beta_prime_; }

 private:
  double alpha_prime_ = 0.0;
  double beta_prime_ = 0.0;
};

// Randomized response is (epsilon, 0)-differentially private.
struct DPParams {
  double epsilon = 1.0;
  static constexpr double kDelta = 0.0;
};

struct MCConversion {
  MCNoise noise;
  double corrupted_base_rate = 0.0;
};

struct InjectionResult {
  Dataset data;
  // flipped[i] == 1 iff example i's sensitive bit was changed.
  BitVector flipped;
  long flips_to_zero = 0;  // 1 -> 0
  long flips_to_one = 0;   // 0 -> 1
};

// Flips each sensitive bit independently. One Rng(seed) is drawn exactly
// once per example, in example order.
InjectionResult inject_ccn_traced(const Dataset& data, const CCNNoise& noise,
                                  std::uint64_t seed);
Dataset inject_ccn(const Dataset& data, const CCNNoise& noise,
                   std::uint64_t seed);
// Censoring: only A=0 examples are flipped (into apparent A=1).
Dataset inject_pu(const Dataset& data, double rho_minus, std::uint64_t seed);

// Exact MC corruption of a population. Every input cell (x, a, y) yields a
// cell with A_corr = a followed by one with A_corr = 1 - a; zero-mass cells
// are dropped. P[A_corr = 1] equals `target_base_rate`.
DiscretePopulation corrupt_population(const DiscretePopulation& pop,
                                      const MCNoise& noise,
                                      double target_base_rate);

// pi_corr = (1 - rho+) pi + rho- (1 - pi); alpha = rho- (1 - pi) / pi_corr;
// beta = rho+ pi / (1 - pi_corr).
MCConversion ccn_to_mc(const CCNNoise& noise, double pi_a);
// As ccn_to_mc, but given the observed corrupted base rate: the clean rate is
// recovered as (pi_corr - rho-) / (1 - rho+ - rho-).
MCConversion ccn_to_mc_from_corrupted(const CCNNoise& noise,
                                      double corrupted_base_rate);

EOConditionalNoise mc_to_eo(const MCNoise& noise, double p_y1_given_a1,
                            double p_y1_given_a0);

double scale_tolerance(double tau, const MCNoise& noise);
double scale_tolerance(double tau, const EOConditionalNoise& noise);

// Minimal flip probability giving (epsilon, 0)-DP: 1 / (exp(epsilon) + 1).
double dp_rho_for_epsilon(double epsilon);
// Tightest epsilon for flip probability rho in (0, 0.5): ln((1 - rho) / rho).
double dp_epsilon_for_rho(double rho);

}  // namespace fairnoise

#endif  // FAIRNOISE_NOISE_H_
