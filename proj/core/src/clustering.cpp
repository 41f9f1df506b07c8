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

#include "rusais/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rusais/errors.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxLloydIterations = 100;
constexpr double kCenterShiftTol = 1e-8;

int count_distinct_weighted_points(const Eigen::MatrixXd& pts,
                                   const Eigen::VectorXd& w) {
  std::vector<int> idx;
  for (int i = 0; i < pts.rows(); ++i)
    if (w[i] > 0.0) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    for (int d = 0; d < pts.cols(); ++d) {
      if (pts(a, d) != pts(b, d)) return pts(a, d) < pts(b, d);
    }
    return false;
  });
  int distinct = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || pts.row(idx[i]) != pts.row(idx[i - 1])) ++distinct;
  }
  return distinct;
}

// Categorical draw from unnormalized nonnegative scores.
int draw_categorical(const Eigen::VectorXd& scores, double total,
                     RngStream& rng) {
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (int i = 0; i < scores.size(); ++i) {
    acc += scores[i];
    if (u <= acc) return i;
  }
  for (int i = static_cast<int>(scores.size()) - 1; i >= 0; --i)
    if (scores[i] > 0.0) return i;
  return 0;
}

// Plain k-means++ over the sample positions. The partition has to stay
// spatial: the mixture keeps 1/K of its mass on every cluster, which is
// what lets low-weight regions keep feeding samples to later steps.
Eigen::MatrixXd kmeanspp_init(const Eigen::MatrixXd& pts, int k,
                              RngStream& rng) {
  Eigen::MatrixXd centers(k, pts.cols());
  centers.row(0) = pts.row(rng.index(pts.rows()));
  Eigen::VectorXd d2 =
      (pts.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double total = d2.sum();
    const int pick = total > 0.0 ? draw_categorical(d2, total, rng)
                                 : static_cast<int>(rng.index(pts.rows()));
    centers.row(j) = pts.row(pick);
    d2 = d2.cwiseMin(
        (pts.rowwise() - centers.row(j)).rowwise().squaredNorm());
  }
  return centers;
}

}  // namespace

Eigen::VectorXd WeightedSamples::normalized_weights() const {
  const double lse = log_sum_exp(log_weights);
  if (lse == -kInf)
    throw DegenerateInputError("WeightedSamples: no finite log weight");
  Eigen::VectorXd w(log_weights.size());
  for (int i = 0; i < log_weights.size(); ++i)
    w[i] = (log_weights[i] == -kInf) ? 0.0 : std::exp(log_weights[i] - lse);
  return w;
}

KmeansResult weighted_kmeans(const WeightedSamples& ws, int k,
                             RngStream& rng) {
  if (k < 1) throw DomainError("weighted_kmeans: k must be >= 1");
  const Eigen::MatrixXd& pts = ws.points;
  const int n = static_cast<int>(pts.rows());
  if (ws.log_weights.size() != n)
    throw DomainError("weighted_kmeans: weight/point count mismatch");
  const Eigen::VectorXd w = ws.normalized_weights();
  if (count_distinct_weighted_points(pts, w) < k)
    throw DegenerateInputError(
        "weighted_kmeans: fewer distinct weighted points than clusters");

  // Lloyd iterations on positions alone. Weights do not drive the
  // partition; they come back in for the output centers below.
  KmeansResult res;
  Eigen::MatrixXd lloyd = kmeanspp_init(pts, k, rng);
  res.assignment.assign(n, 0);
  res.converged = false;
  res.iterations = 0;

  Eigen::VectorXd counts(k);
  Eigen::MatrixXd new_centers(k, pts.cols());

  for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (pts.row(i) - lloyd.row(0)).squaredNorm();
      for (int j = 1; j < k; ++j) {
        const double d = (pts.row(i) - lloyd.row(j)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = j;
        }
      }
      res.assignment[i] = best;
    }

    counts.setZero();
    for (int i = 0; i < n; ++i) counts[res.assignment[i]] += 1.0;
    // Reseed an empty cluster at the point farthest from its center.
    for (int j = 0; j < k; ++j) {
      if (counts[j] > 0.0) continue;
      int farthest = 0;
      double best_d = -1.0;
      for (int i = 0; i < n; ++i) {
        if (counts[res.assignment[i]] <= 1.0) continue;
        const double d =
            (pts.row(i) - lloyd.row(res.assignment[i])).squaredNorm();
        if (d > best_d) {
          best_d = d;
          farthest = i;
        }
      }
      counts[res.assignment[farthest]] -= 1.0;
      lloyd.row(j) = pts.row(farthest);
      res.assignment[farthest] = j;
      counts[j] = 1.0;
    }

    double obj = 0.0;
    for (int i = 0; i < n; ++i)
      obj += (pts.row(i) - lloyd.row(res.assignment[i])).squaredNorm();
    res.objective.push_back(obj / n);
    res.iterations = iter + 1;

    new_centers.setZero();
    for (int i = 0; i < n; ++i)
      new_centers.row(res.assignment[i]) += pts.row(i);
    double shift = 0.0;
    for (int j = 0; j < k; ++j) {
      new_centers.row(j) /= counts[j];
      shift = std::max(shift, (new_centers.row(j) - lloyd.row(j)).norm());
    }
    lloyd = new_centers;
    if (shift < kCenterShiftTol) {
      res.converged = true;
      break;
    }
  }

  // Output centers: the weighted mass center of each cluster. A cluster
  // holding no weight keeps its positional centroid; it still owns 1/K
  // of the mixture, anchoring coverage where the target is currently thin.
  res.centers.resize(k, pts.cols());
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(k);
  res.centers.setZero();
  for (int i = 0; i < n; ++i) {
    mass[res.assignment[i]] += w[i];
    res.centers.row(res.assignment[i]) += w[i] * pts.row(i);
  }
  for (int j = 0; j < k; ++j) {
    if (mass[j] > 0.0) {
      res.centers.row(j) /= mass[j];
    } else {
      res.centers.row(j) = lloyd.row(j);
    }
  }
  return res;
}

WeightedMoments weighted_moments(const WeightedSamples& ws) {
  const Eigen::VectorXd w = ws.normalized_weights();
  WeightedMoments m;
  m.mean = ws.points.transpose() * w;
  m.variance = Eigen::VectorXd::Zero(ws.points.cols());
  for (int i = 0; i < ws.points.rows(); ++i) {
    if (w[i] == 0.0) continue;
    const Eigen::VectorXd d = ws.points.row(i).transpose() - m.mean;
    m.variance += w[i] * d.cwiseProduct(d);
  }
  return m;
}

GaussianMixture build_mixture(const Eigen::MatrixXd& samples,
                              const Eigen::VectorXd& log_weights, int k,
                              RngStream& rng) {
  WeightedSamples ws{samples, log_weights};
  const KmeansResult km = weighted_kmeans(ws, k, rng);

  // Shared diagonal: weighted second moment about the plain batch mean.
  // Measuring deviations from the cloud center rather than the weighted
  // mass center adds the transport offset between the two, which keeps the
  // mixture wide enough to explore the next density in the sequence; the
  // inflation vanishes as the sequence converges.
  const Eigen::VectorXd w = ws.normalized_weights();
  const Eigen::VectorXd cloud_mean = samples.colwise().mean().transpose();
  Eigen::VectorXd second = Eigen::VectorXd::Zero(samples.cols());
  for (int i = 0; i < samples.rows(); ++i) {
    if (w[i] == 0.0) continue;
    const Eigen::VectorXd d = samples.row(i).transpose() - cloud_mean;
    second += w[i] * d.cwiseProduct(d);
  }
  const Eigen::VectorXd diag = second.cwiseMin(1.0);
  const Eigen::MatrixXd shared_cov = diag.asDiagonal();

  std::vector<double> weights(k, 1.0 / k);
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;
  means.reserve(k);
  covs.reserve(k);
  for (int j = 0; j < k; ++j) {
    means.push_back(km.centers.row(j).transpose());
    covs.push_back(shared_cov);
  }
  return GaussianMixture(std::move(weights), std::move(means),
                         std::move(covs));
}

GaussianMixture build_mixture(const GaussianMixture& prev,
                              const Eigen::MatrixXd& samples,
                              const Eigen::VectorXd& log_eta, int k,
                              RngStream& rng) {
  return build_mixture(samples, log_eta - prev.log_pdf_rows(samples), k, rng);
}

}  // namespace rusais
