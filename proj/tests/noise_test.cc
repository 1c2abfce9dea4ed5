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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fairnoise/metrics.h"
#include "fairnoise/noise.h"
#include "fairnoise/oracle.h"
#include "fairnoise/rng.h"
#include "test_util.h"

namespace fairnoise {
namespace {

using testing::ThrownCode;

// Two-point brute force: enumerate (clean A, observed A) outcomes of CCN
// flips and read off the mixture weights of the observed groups.
struct Enumerated {
  double corrupted_base_rate;
  double alpha;
  double beta;
};

Enumerated EnumerateCcn(double rho_plus, double rho_minus, double pi) {
  const double stay1 = pi * (1 - rho_plus);
  const double drop1 = pi * rho_plus;
  const double join0 = (1 - pi) * rho_minus;
  const double stay0 = (1 - pi) * (1 - rho_minus);
  const double observed1 = stay1 + join0;
  const double observed0 = drop1 + stay0;
  return {observed1, join0 / observed1, drop1 / observed0};
}

// Dataset with exactly n/2 examples per group, alternating.
Dataset BalancedDataset(long n) {
  FeatureMatrix x = FeatureMatrix::Zero(n, 1);
  BitVector a(static_cast<std::size_t>(n));
  BitVector y(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i % 2);
    y[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i / 2) % 2);
  }
  return Dataset(std::move(x), std::move(a), std::move(y));
}

TEST(NoiseParamsTest, RejectsInvalidRates) {
  EXPECT_EQ(ThrownCode([] { MCNoise(0.6, 0.4); }), ErrorCode::kInvalidNoise);
  EXPECT_EQ(ThrownCode([] { MCNoise(-0.1, 0.0); }), ErrorCode::kInvalidNoise);
  EXPECT_EQ(ThrownCode([] { CCNNoise(1.0, 0.0); }), ErrorCode::kInvalidNoise);
  EXPECT_EQ(ThrownCode([] { EOConditionalNoise(0.5, 0.5); }),
            ErrorCode::kInvalidNoise);
  EXPECT_NO_THROW(MCNoise(0.6, 0.39));
}

TEST(InjectTest, ZeroNoiseIsIdentity) {
  Rng rng(1);
  const Dataset data = testing::RandomDataset(rng, 500, 2);
  const InjectionResult out = inject_ccn_traced(data, CCNNoise(0, 0), 9);
  EXPECT_EQ(out.data.sensitive(), data.sensitive());
  EXPECT_EQ(out.data.features(), data.features());
  EXPECT_EQ(out.flips_to_zero + out.flips_to_one, 0);
  EXPECT_EQ(inject_pu(data, 0.0, 3).sensitive(), data.sensitive());
}

TEST(InjectTest, TouchesOnlySensitiveBitsAndIsSeeded) {
  Rng rng(2);
  const Dataset data = testing::RandomDataset(rng, 2000, 2);
  const InjectionResult a = inject_ccn_traced(data, CCNNoise(0.3, 0.2), 5);
  const InjectionResult b = inject_ccn_traced(data, CCNNoise(0.3, 0.2), 5);
  EXPECT_EQ(a.data.sensitive(), b.data.sensitive());
  EXPECT_EQ(a.data.features(), data.features());
  EXPECT_EQ(a.data.target(), data.target());
  long flipped = 0;
  for (std::size_t i = 0; i < a.flipped.size(); ++i) {
    EXPECT_EQ(a.flipped[i] != 0,
              a.data.sensitive()[i] != data.sensitive()[i]);
    flipped += a.flipped[i];
  }
  EXPECT_EQ(flipped, a.flips_to_zero + a.flips_to_one);
  EXPECT_NE(inject_ccn(data, CCNNoise(0.3, 0.2), 6).sensitive(),
            a.data.sensitive());
}

TEST(InjectTest, NearCertainFlipOfGroupOne) {
  const Dataset data = BalancedDataset(100000);
  const InjectionResult out = inject_ccn_traced(data, CCNNoise(0.99, 0), 11);
  EXPECT_EQ(out.flips_to_one, 0);
  EXPECT_NEAR(out.flips_to_zero / 50000.0, 0.99, 0.01);
}

TEST(InjectTest, FlipFractionOfGroupZero) {
  const Dataset data = BalancedDataset(200000);
  const InjectionResult out = inject_ccn_traced(data, CCNNoise(0, 0.2), 12);
  // 3 sigma of Binomial(1e5, 0.2) is 0.0038; the bound is looser.
  EXPECT_NEAR(out.flips_to_one / 100000.0, 0.2, 0.012);
  EXPECT_EQ(inject_pu(data, 0.2, 12).sensitive(), out.data.sensitive());
}

TEST(CcnToMcTest, ClosedForms) {
  const MCConversion none = ccn_to_mc(CCNNoise(0, 0), 0.3);
  EXPECT_EQ(none.noise.alpha(), 0.0);
  EXPECT_EQ(none.noise.beta(), 0.0);
  EXPECT_EQ(none.corrupted_base_rate, 0.3);

  const MCConversion sym = ccn_to_mc(CCNNoise(0.15, 0.15), 0.5);
  EXPECT_NEAR(sym.corrupted_base_rate, 0.5, 1e-15);
  EXPECT_NEAR(sym.noise.alpha(), 0.15, 1e-15);
  EXPECT_NEAR(sym.noise.beta(), 0.15, 1e-15);
  EXPECT_NEAR(sym.noise.Scale(), 0.7, 1e-15);

  const MCConversion pu = ccn_to_mc(CCNNoise(0, 0.2), 0.5);
  EXPECT_NEAR(pu.corrupted_base_rate, 0.6, 1e-15);
  EXPECT_NEAR(pu.noise.alpha(), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(pu.noise.beta(), 0.0);

  EXPECT_EQ(ThrownCode([] { ccn_to_mc(CCNNoise(0, 0), 0.0); }),
            ErrorCode::kInvalidBaseRate);
}

TEST(CcnToMcTest, MatchesEnumerationOnGrid) {
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      for (int k = 1; k <= 9; ++k) {
        const double rp = 0.025 * i;
        const double rm = 0.025 * j;
        const double pi = 0.1 * k;
        const Enumerated want = EnumerateCcn(rp, rm, pi);
        const MCConversion got = ccn_to_mc(CCNNoise(rp, rm), pi);
        ASSERT_NEAR(got.corrupted_base_rate, want.corrupted_base_rate, 1e-12);
        ASSERT_NEAR(got.noise.alpha(), want.alpha, 1e-12);
        ASSERT_NEAR(got.noise.beta(), want.beta, 1e-12);
        const MCConversion back =
            ccn_to_mc_from_corrupted(CCNNoise(rp, rm), want.corrupted_base_rate);
        ASSERT_NEAR(back.noise.alpha(), want.alpha, 1e-12);
        ASSERT_NEAR(back.noise.beta(), want.beta, 1e-12);
      }
    }
  }
}

TEST(CcnToMcTest, EmpiricalMixtureProportions) {
  const Dataset data = BalancedDataset(100000);
  for (const auto& [rp, rm] : {std::pair{0.15, 0.15}, std::pair{0.0, 0.2}}) {
    const InjectionResult out = inject_ccn_traced(data, CCNNoise(rp, rm), 21);
    double obs1 = 0, obs1_from0 = 0, obs0 = 0, obs0_from1 = 0;
    for (std::size_t i = 0; i < out.flipped.size(); ++i) {
      if (out.data.sensitive()[i] == 1) {
        ++obs1;
        obs1_from0 += data.sensitive()[i] == 0;
      } else {
        ++obs0;
        obs0_from1 += data.sensitive()[i] == 1;
      }
    }
    const MCNoise mc = ccn_to_mc(CCNNoise(rp, rm), 0.5).noise;
    EXPECT_NEAR(obs1_from0 / obs1, mc.alpha(), 0.015);
    EXPECT_NEAR(obs0_from1 / obs0, mc.beta(), 0.015);
  }
}

TEST(CorruptPopulationTest, IdentityWithoutNoise) {
  Rng rng(4);
  const DiscretePopulation pop = testing::RandomPopulation(rng, 8, 2);
  const DiscretePopulation out =
      corrupt_population(pop, MCNoise(0, 0), pop.BaseRate());
  ASSERT_EQ(out.size(), pop.size());
  for (std::size_t k = 0; k < pop.size(); ++k) {
    EXPECT_EQ(out.cells()[k].features, pop.cells()[k].features);
    EXPECT_EQ(out.cells()[k].sensitive, pop.cells()[k].sensitive);
    EXPECT_NEAR(out.cells()[k].mass, pop.cells()[k].mass, 1e-15);
  }
}

TEST(CorruptPopulationTest, TwoCellHandExpansion) {
  // x=1 has A=1 and x=0 has A=0, masses 0.4 / 0.6; target rate 0.5.
  const DiscretePopulation pop({{Eigen::VectorXd::Constant(1, 1), 1, 1, 0.4},
                                {Eigen::VectorXd::Constant(1, 0), 0, 1, 0.6}});
  const DiscretePopulation out = corrupt_population(pop, MCNoise(0.3, 0.1), 0.5);
  ASSERT_EQ(out.size(), 4u);
  // A_corr=1 = 0.7 D1 + 0.3 D0; A_corr=0 = 0.1 D1 + 0.9 D0; each half mass.
  EXPECT_NEAR(out.cells()[0].mass, 0.5 * 0.7, 1e-15);  // x=1, A_corr=1
  EXPECT_NEAR(out.cells()[1].mass, 0.5 * 0.1, 1e-15);  // x=1, A_corr=0
  EXPECT_NEAR(out.cells()[2].mass, 0.5 * 0.9, 1e-15);  // x=0, A_corr=0
  EXPECT_NEAR(out.cells()[3].mass, 0.5 * 0.3, 1e-15);  // x=0, A_corr=1
  EXPECT_EQ(out.cells()[1].sensitive, 0);
  EXPECT_EQ(out.cells()[3].sensitive, 1);
}

TEST(CorruptPopulationTest, Errors) {
  const DiscretePopulation one_group(
      {{Eigen::VectorXd::Zero(1), 1, 1, 1.0}});
  EXPECT_EQ(ThrownCode([&] {
              corrupt_population(one_group, MCNoise(0.1, 0.1), 0.5);
            }),
            ErrorCode::kEmptySlice);
  Rng rng(5);
  const DiscretePopulation pop = testing::RandomPopulation(rng, 6, 1);
  for (const double bad : {0.0, 1.0, -0.2}) {
    EXPECT_EQ(ThrownCode([&] {
                corrupt_population(pop, MCNoise(0.1, 0.1), bad);
              }),
              ErrorCode::kInvalidBaseRate);
  }
}

class MixtureIdentityTest : public ::testing::TestWithParam<int> {};

// Corrupted population metrics shrink by exactly 1 - alpha - beta.
TEST_P(MixtureIdentityTest, DisparityScalesByNoise) {
  Rng rng(DeriveSeed(31, static_cast<std::uint64_t>(GetParam())));
  const DiscretePopulation pop = testing::RandomPopulation(rng, 16, 3);
  const LinearScorer f = testing::RandomScorer(rng, 3);
  double alpha = 0, beta = 0;
  do {
    alpha = rng.Uniform();
    beta = rng.Uniform();
  } while (alpha + beta > 0.95);
  const MCNoise noise(alpha, beta);
  const double pi_corr = 0.02 + 0.96 * rng.Uniform();
  const DiscretePopulation corr = corrupt_population(pop, noise, pi_corr);
  EXPECT_NEAR(corr.BaseRate(), pi_corr, 1e-12);
  for (const auto loss : {FairnessLoss::kPredictNonPositive,
                          FairnessLoss::kZeroOne}) {
    EXPECT_NEAR(ddp(corr, f, loss), noise.Scale() * ddp(pop, f, loss), 1e-12);
  }
  const EOConditionalNoise eo =
      mc_to_eo(noise, pop.TargetRate(1), pop.TargetRate(0));
  EXPECT_GT(eo.Scale(), 0.0);
  EXPECT_NEAR(deo(corr, f), eo.Scale() * deo(pop, f), 1e-12);
}

// Conditioning the corrupted population on Y=1 gives the (alpha', beta')
// mixture of the clean Y=1 group conditionals, cell by cell.
TEST_P(MixtureIdentityTest, PositiveSliceIsEoMixture) {
  Rng rng(DeriveSeed(37, static_cast<std::uint64_t>(GetParam())));
  const DiscretePopulation pop = testing::RandomPopulation(rng, 16, 2);
  const MCNoise noise(0.45 * rng.Uniform(), 0.45 * rng.Uniform());
  const DiscretePopulation corr =
      corrupt_population(pop, noise, 0.1 + 0.8 * rng.Uniform());
  const EOConditionalNoise eo =
      mc_to_eo(noise, pop.TargetRate(1), pop.TargetRate(0));
  const double clean11 = pop.SliceMass(Slice::Cell(1, 1));
  const double clean01 = pop.SliceMass(Slice::Cell(0, 1));
  const double corr11 = corr.SliceMass(Slice::Cell(1, 1));
  const double corr01 = corr.SliceMass(Slice::Cell(0, 1));
  for (const auto& out : corr.cells()) {
    if (out.target != 1) continue;
    // Origin: the clean cell with the same features.
    const PopulationCell* origin = nullptr;
    for (const auto& c : pop.cells()) {
      if (c.features == out.features && c.target == 1) origin = &c;
    }
    ASSERT_NE(origin, nullptr);
    const double clean_share =
        origin->mass / (origin->sensitive == 1 ? clean11 : clean01);
    double weight = 0;
    if (out.sensitive == 1) {
      weight = origin->sensitive == 1 ? 1 - eo.alpha_prime() : eo.alpha_prime();
      EXPECT_NEAR(out.mass / corr11, weight * clean_share, 1e-12);
    } else {
      weight = origin->sensitive == 0 ? 1 - eo.beta_prime() : eo.beta_prime();
      EXPECT_NEAR(out.mass / corr01, weight * clean_share, 1e-12);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, MixtureIdentityTest, ::testing::Range(0, 50));

TEST(McToEoTest, Examples) {
  const MCNoise noise(0.2, 0.1);
  const EOConditionalNoise same = mc_to_eo(noise, 0.4, 0.4);
  EXPECT_NEAR(same.alpha_prime(), 0.2, 1e-15);
  EXPECT_NEAR(same.beta_prime(), 0.1, 1e-15);
  const EOConditionalNoise zero = mc_to_eo(MCNoise(0, 0), 0.3, 0.6);
  EXPECT_EQ(zero.alpha_prime(), 0.0);
  EXPECT_EQ(zero.beta_prime(), 0.0);
  EXPECT_EQ(ThrownCode([] { mc_to_eo(MCNoise(0.1, 0.1), 0.0, 0.0); }),
            ErrorCode::kDegenerateConditional);
  EXPECT_EQ(ThrownCode([] { mc_to_eo(MCNoise(0.1, 0.1), 1.2, 0.5); }),
            ErrorCode::kInvalidArgument);
}

TEST(McToEoTest, NinthByEnumeration) {
  // P[Y=1|A=1] = 0.5, P[Y=1|A=0] = 0.25 with P[A=1] = 0.5.
  std::vector<PopulationCell> cells;
  const double masses[4] = {0.375, 0.125, 0.25, 0.25};  // (A,Y) = 00,01,10,11
  for (int k = 0; k < 4; ++k) {
    cells.push_back({Eigen::VectorXd::Constant(1, k), k / 2, k % 2, masses[k]});
  }
  const DiscretePopulation pop(cells);
  const DiscretePopulation corr = corrupt_population(pop, MCNoise(0.2, 0), 0.5);
  // alpha' = P[clean A = 0 | A_corr = 1, Y = 1]; the clean A=0,Y=1 cell is x=1.
  double from0 = 0;
  for (const auto& c : corr.cells()) {
    if (c.sensitive == 1 && c.target == 1 && c.features[0] == 1) from0 += c.mass;
  }
  const double enumerated = from0 / corr.SliceMass(Slice::Cell(1, 1));
  EXPECT_NEAR(enumerated, 1.0 / 9.0, 1e-15);
  const EOConditionalNoise eo = mc_to_eo(MCNoise(0.2, 0), 0.5, 0.25);
  EXPECT_NEAR(eo.alpha_prime(), enumerated, 1e-15);
  EXPECT_EQ(eo.beta_prime(), 0.0);
}

TEST(ScaleToleranceTest, Arithmetic) {
  EXPECT_EQ(scale_tolerance(0.3, MCNoise(0, 0)), 0.3);
  EXPECT_NEAR(scale_tolerance(0.2, MCNoise(0.15, 0.15)), 0.14, 1e-15);
  EXPECT_NEAR(scale_tolerance(0.1, MCNoise(0.6, 0.39)), 0.001, 1e-15);
  EXPECT_EQ(scale_tolerance(0.0, MCNoise(0.3, 0.3)), 0.0);
  EXPECT_NEAR(scale_tolerance(0.2, EOConditionalNoise(0.1, 0.2)), 0.14, 1e-15);
  EXPECT_EQ(ThrownCode([] { scale_tolerance(-0.1, MCNoise(0, 0)); }),
            ErrorCode::kInvalidArgument);
}

TEST(ScaleToleranceTest, MonotoneInTauAntitoneInNoise) {
  Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    const double t1 = rng.Uniform();
    const double t2 = t1 + rng.Uniform();
    const double a = 0.4 * rng.Uniform();
    const double b = 0.4 * rng.Uniform();
    const double more = 0.15 * rng.Uniform();
    EXPECT_LE(scale_tolerance(t1, MCNoise(a, b)),
              scale_tolerance(t2, MCNoise(a, b)));
    EXPECT_GE(scale_tolerance(t1, MCNoise(a, b)),
              scale_tolerance(t1, MCNoise(a + more, b)));
  }
}

TEST(DpCalibrationTest, PrivacyAnchors) {
  EXPECT_NEAR(dp_rho_for_epsilon(1.73), 0.1506, 5e-5);
  EXPECT_NEAR(dp_epsilon_for_rho(0.15), 1.7346, 5e-5);
  EXPECT_LT(dp_rho_for_epsilon(50), 1e-20);
  EXPECT_NEAR(dp_rho_for_epsilon(1.0), 1.0 / (std::exp(1.0) + 1.0), 1e-15);
  EXPECT_NEAR(dp_rho_for_epsilon(1.0), 0.26894, 5e-6);
  EXPECT_LT(dp_epsilon_for_rho(0.499999), 1e-5);
  EXPECT_GT(dp_epsilon_for_rho(0.499999), 0.0);
}

TEST(DpCalibrationTest, RoundTrip) {
  for (int k = 1; k <= 9; ++k) {
    const double rho = 0.05 * k;
    EXPECT_NEAR(dp_rho_for_epsilon(dp_epsilon_for_rho(rho)), rho, 1e-12);
  }
  for (const double eps : {0.1, 1.0, 3.0, 10.0}) {
    EXPECT_NEAR(dp_epsilon_for_rho(dp_rho_for_epsilon(eps)), eps, 1e-12);
  }
}

TEST(DpCalibrationTest, Errors) {
  EXPECT_EQ(ThrownCode([] { dp_rho_for_epsilon(0.0); }),
            ErrorCode::kNonPositiveEpsilon);
  EXPECT_EQ(ThrownCode([] { dp_rho_for_epsilon(-1.0); }),
            ErrorCode::kNonPositiveEpsilon);
  for (const double bad : {0.5, 0.6, 0.0, -0.1}) {
    EXPECT_EQ(ThrownCode([&] { dp_epsilon_for_rho(bad); }),
              ErrorCode::kOutOfRangeRho);
  }
}

}  // namespace
}  // namespace fairnoise
