// Copyright 2026 The rusais Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RUSAIS_CLUSTERING_HPP
#define RUSAIS_CLUSTERING_HPP

#include <Eigen/Dense>
#include <vector>

#include "rusais/mixture.hpp"
#include "rusais/rng.hpp"

namespace rusais {

// Samples with log-space importance weights. Only the relative magnitude
// of the weights matters; normalization happens through log-sum-exp.
struct WeightedSamples {
  Eigen::MatrixXd points;       // n x dim
  Eigen::VectorXd log_weights;  // length n, -inf allowed

  // exp(log_weights - log_sum_exp(log_weights)); sums to 1.
  // Throws DegenerateInputError when no weight is finite.
  Eigen::VectorXd normalized_weights() const;
};

struct KmeansResult {
  Eigen::MatrixXd centers;        // K x dim, weighted mass center per cluster
  std::vector<int> assignment;    // length n
  // Mean squared distance to the Lloyd centers per iteration,
  // non-increasing until convergence or the iteration cap.
  std::vector<double> objective;
  int iterations;
  bool converged;
};

// Clusters the sample positions with standard k-means (k-means++ seeding,
// Lloyd iterations, empty clusters reseeded at the farthest point), then
// reports the weight-weighted mass center of every cluster. The partition
// is deliberately weight-blind: every cluster keeps an equal share of the
// downstream mixture, so thin-weight regions stay represented while the
// mass centers track the weighted bulk inside each cell.
KmeansResult weighted_kmeans(const WeightedSamples& ws, int k, RngStream& rng);

struct WeightedMoments {
  Eigen::VectorXd mean;
  Eigen::VectorXd variance;  // per coordinate, no Bessel correction
};

WeightedMoments weighted_moments(const WeightedSamples& ws);

// One construction step of the adaptive mixture sequence: cluster the
// weighted samples, put a component at each mass center with weight 1/K,
// and share one diagonal covariance min(sigma_hat_i^2, 1) across
// components, where sigma_hat^2 is the weighted second moment about the
// batch mean. The mixture tails stay at least as heavy as the target's.
GaussianMixture build_mixture(const Eigen::MatrixXd& samples,
                              const Eigen::VectorXd& log_weights, int k,
                              RngStream& rng);

// Convenience overload: weights are eta(x)/p_prev(x) with p_prev evaluated
// here. `samples` must have been drawn from `prev`.
GaussianMixture build_mixture(const GaussianMixture& prev,
                              const Eigen::MatrixXd& samples,
                              const Eigen::VectorXd& log_eta, int k,
                              RngStream& rng);

}  // namespace rusais

#endif  // RUSAIS_CLUSTERING_HPP
