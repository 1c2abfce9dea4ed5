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

#include "fairnoise/logistic.h"

#include <cmath>

#include "fairnoise/error.h"

namespace fairnoise {

Standardizer Standardizer::Fit(const FeatureMatrix& x) {
  Standardizer s;
  const auto n = static_cast<double>(x.rows());
  s.mean = x.colwise().mean();
  s.scale = Eigen::RowVectorXd::Ones(x.cols());
  if (x.rows() < 2) return s;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var = (x.col(j).array() - s.mean[j]).square().sum() / n;
    if (var > 1e-24) s.scale[j] = std::sqrt(var);
  }
  return s;
}

FeatureMatrix Standardizer::Apply(const FeatureMatrix& x) const {
  return (x.rowwise() - mean).array().rowwise() / scale.array();
}

LinearScorer Standardizer::Unstandardize(const Eigen::VectorXd& weights,
                                         double intercept) const {
  LinearScorer out;
  out.weights = weights.array() / scale.transpose().array();
  out.intercept = intercept - mean.dot(out.weights);
  return out;
}

LogisticFit fit_logistic(const FeatureMatrix& x,
                         std::span<const std::uint8_t> labels,
                         const LogisticConfig& config,
                         std::span<const double> sample_weights) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  if (n == 0) throw Error(ErrorCode::kEmptyDataset, "no training examples");
  if (labels.size() != static_cast<std::size_t>(n) ||
      (!sample_weights.empty() &&
       sample_weights.size() != static_cast<std::size_t>(n))) {
    throw Error(ErrorCode::kInvalidArgument, "label/weight length mismatch");
  }

  const Standardizer standardizer = Standardizer::Fit(x);
  // Design matrix with a trailing intercept column.
  Eigen::MatrixXd z(n, d + 1);
  z.leftCols(d) = standardizer.Apply(x);
  z.col(d).setOnes();

  Eigen::VectorXd y(n);
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = labels[static_cast<std::size_t>(i)];
    c[i] = sample_weights.empty() ? 1.0
                                  : sample_weights[static_cast<std::size_t>(i)];
  }
  c /= c.sum();
  const double reg = config.regularization >= 0.0
                         ? config.regularization
                         : 1.0 / static_cast<double>(n);
  Eigen::VectorXd penalty = Eigen::VectorXd::Constant(d + 1, reg);
  penalty[d] = 0.0;

  auto objective = [&](const Eigen::VectorXd& theta) {
    const Eigen::VectorXd s = z * theta;
    double loss = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      loss += c[i] * (Softplus(s[i]) - y[i] * s[i]);
    }
    return loss + 0.5 * (penalty.array() * theta.array().square()).sum();
  };

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);
  double loss = objective(theta);
  LogisticFit fit;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    const Eigen::VectorXd s = z * theta;
    Eigen::VectorXd residual(n);
    Eigen::VectorXd curvature(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double p = Sigmoid(s[i]);
      residual[i] = c[i] * (p - y[i]);
      curvature[i] = c[i] * p * (1.0 - p);
    }
    const Eigen::VectorXd gradient =
        z.transpose() * residual + (penalty.array() * theta.array()).matrix();
    fit.gradient_norm = gradient.norm();
    fit.iterations = iter;
    if (fit.gradient_norm <= config.gradient_tolerance) {
      fit.converged = true;
      break;
    }
    Eigen::MatrixXd hessian = z.transpose() * curvature.asDiagonal() * z;
    hessian.diagonal() += penalty;
    // Keeps the unpenalized intercept direction invertible when all labels
    // agree.
    hessian.diagonal().array() += 1e-12;
    const Eigen::VectorXd direction = -hessian.ldlt().solve(gradient);

    double step = 1.0;
    double candidate_loss = objective(theta + direction);
    const double slope = gradient.dot(direction);
    while (candidate_loss > loss + 1e-4 * step * slope && step > 1e-10) {
      step *= 0.5;
      candidate_loss = objective(theta + step * direction);
    }
    if (candidate_loss > loss) break;  // no further progress in float
    theta += step * direction;
    loss = candidate_loss;
    fit.iterations = iter + 1;
  }
  fit.final_loss = loss;
  fit.scorer = standardizer.Unstandardize(theta.head(d), theta[d]);
  return fit;
}

}  // namespace fairnoise
