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
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "fairnoise/fairtrain.h"
#include "fairnoise/metrics.h"
#include "fairnoise/noise.h"
#include "fairnoise/rng.h"
#include "fairnoise/synthetic.h"
#include "test_util.h"

namespace fairnoise {
namespace {

using testing::ThrownCode;

const Scorer kIdentity = [](const FeatureRef& x) { return x[0]; };

FairnessSpec Dp(double tau) {
  return FairnessSpec::Default(Criterion::kDemographicParity, tau);
}

void ExpectSameModel(const FairClassifier& a, const FairClassifier& b) {
  ASSERT_EQ(a.members().size(), b.members().size());
  for (std::size_t k = 0; k < a.members().size(); ++k) {
    EXPECT_EQ(a.weights()[k], b.weights()[k]);
    EXPECT_EQ(a.members()[k].intercept, b.members()[k].intercept);
    EXPECT_EQ(a.members()[k].weights, b.members()[k].weights);
  }
}

TEST(TrainConfigTest, Validation) {
  TrainConfig config;
  EXPECT_NO_THROW(config.Validate());
  config.outer_iterations = 0;
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }),
            ErrorCode::kInvalidArgument);
  config = {};
  config.dual_step = 0;
  EXPECT_EQ(ThrownCode([&] { config.Validate(); }),
            ErrorCode::kInvalidArgument);
}

TEST(TrainFairTest, VacuousToleranceMatchesUnconstrained) {
  const Dataset data = synth_generate(SyntheticConfig::Default());
  const FairClassifier fair = train_fair(data, Dp(1.0));
  const FairClassifier plain = train_unconstrained(data);
  EXPECT_NEAR(accuracy_risk(data, fair.Predict(data)),
              accuracy_risk(data, plain.Predict(data)), 0.01);
}

TEST(TrainFairTest, TightToleranceOnHighDisparityData) {
  const Dataset data = synth_generate(SyntheticConfig::HighDisparity());
  EXPECT_GT(ddp(data, train_unconstrained(data).Predict(data)), 0.35);
  const FairClassifier model = train_fair(data, Dp(0.01));
  EXPECT_LE(ddp(data, model.Predict(data)), 0.05);
  EXPECT_FALSE(model.trace().infeasible);
  EXPECT_NEAR(model.trace().final_violation, ddp(data, model.Predict(data)),
              1e-15);
}

TEST(TrainFairTest, EqualOpportunityConstraint) {
  const Dataset data = synth_generate(SyntheticConfig::HighDisparity());
  const FairnessSpec eo = FairnessSpec::Default(Criterion::kEqualOpportunity, 0.02);
  const FairClassifier model = train_fair(data, eo);
  EXPECT_LE(deo(data, model.Predict(data)), 0.02);
}

TEST(TrainFairTest, SingleGroupIsAnError) {
  const Dataset data =
      testing::MakeDataset({{0, 1, 0}, {1, 1, 1}, {2, 1, 1}});
  EXPECT_EQ(ThrownCode([&] { train_fair(data, Dp(0.1)); }),
            ErrorCode::kEmptySlice);
  const Dataset no_positive_a0 =
      testing::MakeDataset({{0, 0, 0}, {1, 1, 1}, {2, 1, 0}});
  EXPECT_EQ(ThrownCode([&] {
              train_fair(no_positive_a0,
                         FairnessSpec::Default(Criterion::kEqualOpportunity, 0.1));
            }),
            ErrorCode::kEmptySlice);
}

TEST(TrainFairTest, DeterministicAndGapNonIncreasing) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 1500;
  const Dataset data = synth_generate(config);
  for (const ReturnMode mode : {ReturnMode::kAverage, ReturnMode::kBestIterate}) {
    TrainConfig tc;
    tc.return_mode = mode;
    const FairClassifier a = train_fair(data, Dp(0.05), tc);
    const FairClassifier b = train_fair(data, Dp(0.05), tc);
    ExpectSameModel(a, b);
    const auto& iterates = a.trace().iterates;
    ASSERT_EQ(static_cast<int>(iterates.size()), tc.outer_iterations);
    for (std::size_t t = 1; t < iterates.size(); ++t) {
      EXPECT_LE(iterates[t].best_gap, iterates[t - 1].best_gap);
    }
    for (const auto& it : iterates) {
      EXPECT_LE(it.lambda_plus + it.lambda_minus, tc.dual_bound);
      EXPECT_GE(it.lambda_plus, 0.0);
      EXPECT_GE(it.lambda_minus, 0.0);
    }
  }
}

TEST(TrainFairTest, AverageModeIsUniformEnsemble) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 1000;
  const Dataset data = synth_generate(config);
  TrainConfig tc;
  tc.return_mode = ReturnMode::kAverage;
  tc.outer_iterations = 10;
  const FairClassifier model = train_fair(data, Dp(0.3), tc);
  ASSERT_EQ(model.members().size(), 10u);
  double total = 0;
  for (const double w : model.weights()) {
    EXPECT_DOUBLE_EQ(w, 0.1);
    total += w;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(TrainFairNoisyTest, ZeroNoiseMatchesPlainTraining) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 1500;
  const Dataset data = synth_generate(config);
  const FairClassifier plain = train_fair(data, Dp(0.1));
  const FairClassifier noisy = train_fair_noisy(data, Dp(0.1), MCNoise(0, 0));
  ExpectSameModel(plain, noisy);
  EXPECT_EQ(noisy.trace().tolerance, 0.1);
}

TEST(TrainFairNoisyTest, RecordsScaledTolerance) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 1000;
  const Dataset data = synth_generate(config);
  TrainConfig tc;
  tc.outer_iterations = 5;
  const FairClassifier model =
      train_fair_noisy(data, Dp(0.2), MCNoise(0.15, 0.15), tc);
  EXPECT_NEAR(model.trace().tolerance, 0.14, 1e-12);
  EXPECT_EQ(model.trace().requested_tolerance, 0.2);
  ASSERT_TRUE(model.trace().noise_scale.has_value());
  EXPECT_NEAR(*model.trace().noise_scale, 0.7, 1e-12);

  const FairClassifier eo = train_fair_noisy(
      data, FairnessSpec::Default(Criterion::kEqualOpportunity, 0.2),
      EOConditionalNoise(0.1, 0.2), tc);
  EXPECT_NEAR(eo.trace().tolerance, 0.14, 1e-12);
}

TEST(TrainFairNoisyTest, EstimatesRatesWhenAsked) {
  AnchorConfig anchor;
  anchor.n = 6000;
  const Dataset corrupted =
      inject_ccn(anchor_generate(anchor), CCNNoise(0.2, 0.2), 4);
  TrainConfig tc;
  tc.outer_iterations = 5;
  const FairClassifier model =
      train_fair_noisy(corrupted, Dp(0.1), EstimateNoise{}, tc);
  ASSERT_TRUE(model.trace().estimated_rates.has_value());
  EXPECT_NEAR(model.trace().estimated_rates->rho_plus(), 0.2, 0.07);
  EXPECT_LT(model.trace().tolerance, 0.1);
}

// Clean-attribute test violation stays near tau when the tolerance is
// scaled, while training at the raw tau on corrupted data overshoots.
TEST(TrainFairNoisyTest, ScalingControlsCleanViolation) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 20000;
  const Dataset train = synth_generate(config);
  config.seed += 1;
  const Dataset test = synth_generate(config);
  const CCNNoise rates(0.2, 0.2);
  const Dataset corrupted = inject_ccn(train, rates, 77);
  const MCNoise mc = ccn_to_mc_from_corrupted(rates, corrupted.BaseRate()).noise;
  const double tau = 0.05;
  const FairClassifier scaled = train_fair_noisy(corrupted, Dp(tau), mc);
  const FairClassifier raw = train_fair(corrupted, Dp(tau));
  EXPECT_LE(ddp(test, scaled.Predict(test)), tau + 0.03);
  EXPECT_GE(ddp(test, raw.Predict(test)), tau + 0.05);
}

TEST(ReductionConstraintTest, Examples) {
  const Dataset balanced = testing::MakeDataset(
      {{1, 0, 0}, {-1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
  EXPECT_DOUBLE_EQ(ddp(balanced, kIdentity), 0.5);
  EXPECT_DOUBLE_EQ(reduction_constraint_value(balanced, kIdentity), 0.25);
  EXPECT_EQ(reduction_constraint_value(
                balanced, [](const FeatureRef&) { return 1.0; }),
            0.0);

  // pi_a = 0.8 with rates 0.9 (A=1) and 0.5 (A=0).
  std::vector<std::tuple<double, int, int>> rows;
  for (int i = 0; i < 40; ++i) rows.emplace_back(i < 36 ? 1 : -1, 1, 0);
  for (int i = 0; i < 10; ++i) rows.emplace_back(i < 5 ? 1 : -1, 0, 0);
  const Dataset skewed = testing::MakeDataset(rows);
  const double overall = (36.0 + 5.0) / 50.0;
  const double direct = std::max(std::abs(0.9 - overall), std::abs(0.5 - overall));
  EXPECT_NEAR(reduction_constraint_value(skewed, kIdentity), 0.32, 1e-12);
  EXPECT_NEAR(reduction_constraint_value(skewed, kIdentity), direct, 1e-15);
}

TEST(ReductionConstraintTest, Conversions) {
  EXPECT_DOUBLE_EQ(mean_diff_from_reduction(0.25, 0.5), 0.5);
  EXPECT_EQ(mean_diff_from_reduction(0.0, 0.7), 0.0);
  EXPECT_EQ(ThrownCode([] { mean_diff_from_reduction(0.1, 0.4); }),
            ErrorCode::kOutOfRangeWeight);
  EXPECT_EQ(ThrownCode([] { mean_diff_from_reduction(0.1, 1.01); }),
            ErrorCode::kOutOfRangeWeight);
  EXPECT_NEAR(conservative_half_tolerance(0.2, MCNoise(0.15, 0.15)), 0.07,
              1e-15);
  EXPECT_EQ(conservative_half_tolerance(0.3, MCNoise(0, 0)), 0.15);
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const MCNoise noise(0.45 * rng.Uniform(), 0.45 * rng.Uniform());
    const double tau = rng.Uniform();
    EXPECT_DOUBLE_EQ(conservative_half_tolerance(tau, noise),
                     scale_tolerance(tau, noise) / 2);
    const EOConditionalNoise eo(noise.alpha(), noise.beta());
    EXPECT_DOUBLE_EQ(conservative_half_tolerance(tau, eo),
                     scale_tolerance(tau, eo) / 2);
  }
}

class ReductionIdentityTest : public ::testing::TestWithParam<int> {};

TEST_P(ReductionIdentityTest, BaseRateMultipleOfMeanDifference) {
  Rng rng(DeriveSeed(41, static_cast<std::uint64_t>(GetParam())));
  const Dataset data =
      testing::RandomDataset(rng, 20 + static_cast<long>(rng.Below(200)), 2);
  const LinearScorer f = testing::RandomScorer(rng, 2);
  const BitVector pred = PredictAll(f, data);

  const double pi = data.BaseRate();
  const double weight = std::max(pi, 1 - pi);
  const double dp = ddp(data, pred);
  const double value =
      reduction_constraint_value(data, pred, Criterion::kDemographicParity);
  EXPECT_NEAR(value, weight * dp, 1e-12);
  EXPECT_LE(0.5 * dp, value + 1e-15);
  EXPECT_LE(value, dp + 1e-15);
  EXPECT_NEAR(mean_diff_from_reduction(value, weight), dp, 1e-12);

  const Dataset positives = data.Filter(Slice::Label(1));
  const double pi1 = positives.BaseRate();
  EXPECT_NEAR(
      reduction_constraint_value(data, pred, Criterion::kEqualOpportunity),
      std::max(pi1, 1 - pi1) * deo(data, pred), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ReductionIdentityTest, ::testing::Range(0, 100));

TEST(ReductionConstraintTest, BalancedGroupsAcceptSameScorers) {
  Rng rng(13);
  Dataset data = testing::RandomDataset(rng, 400, 2);
  BitVector a(400);
  for (std::size_t i = 0; i < 400; ++i) a[i] = static_cast<std::uint8_t>(i % 2);
  data = data.WithSensitive(a);
  ASSERT_EQ(data.BaseRate(), 0.5);
  for (int k = 0; k < 300; ++k) {
    const LinearScorer f = testing::RandomScorer(rng, 2);
    // Irrational-ish tolerances avoid ties with achievable rate gaps.
    const double tau = 0.3 * rng.Uniform() + 1e-7;
    EXPECT_EQ(reduction_constraint_value(data, f) <= tau / 2,
              ddp(data, f) <= tau);
  }
}

TEST(ModelIoTest, RoundTripReproducesScores) {
  SyntheticConfig config = SyntheticConfig::Default();
  config.n = 800;
  const Dataset data = synth_generate(config);
  TrainConfig tc;
  tc.return_mode = ReturnMode::kAverage;
  tc.outer_iterations = 7;
  const FairClassifier model = train_fair(data, Dp(0.1), tc);
  std::stringstream buffer;
  save_model(model, buffer);
  const FairClassifier loaded = load_model(buffer);
  ExpectSameModel(model, loaded);
  const Eigen::VectorXd s1 = model.ScoreAll(data.features());
  const Eigen::VectorXd s2 = loaded.ScoreAll(data.features());
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(model.Predict(data), loaded.Predict(data));
}

TEST(ModelIoTest, RejectsMalformedFiles) {
  for (const char* text :
       {"", "other-model 1\n", "fairnoise-model 1\ndimension 0\n",
        "fairnoise-model 1\ndimension 1\nmembers 1\nmember 1 x 2\n",
        "fairnoise-model 1\ndimension 2\nmembers 1\nmember 1 0 2\n"}) {
    std::istringstream in(text);
    EXPECT_EQ(ThrownCode([&] { load_model(in); }), ErrorCode::kParseError)
        << text;
  }
  std::istringstream bad_weights(
      "fairnoise-model 1\ndimension 1\nmembers 2\nmember 0.5 0 1\n"
      "member 0.6 0 1\n");
  EXPECT_EQ(ThrownCode([&] { load_model(bad_weights); }),
            ErrorCode::kInvalidArgument);
}

TEST(FairClassifierTest, RejectsBadWeights) {
  LinearScorer s{Eigen::VectorXd::Ones(1), 0.0};
  EXPECT_EQ(ThrownCode([&] { FairClassifier({s, s}, {0.5, 0.4}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(ThrownCode([&] { FairClassifier({s}, {}); }),
            ErrorCode::kInvalidArgument);
  const FairClassifier ok({s, s}, {0.25, 0.75});
  EXPECT_EQ(ok.Score(Eigen::VectorXd::Constant(1, 2.0)), 2.0);
}

}  // namespace
}  // namespace fairnoise
