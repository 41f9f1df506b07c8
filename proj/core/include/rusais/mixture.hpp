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

#ifndef RUSAIS_MIXTURE_HPP
#define RUSAIS_MIXTURE_HPP

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <vector>

#include "rusais/rng.hpp"

namespace rusais {

// Gaussian mixture density. Immutable after construction; component
// covariances are symmetrized and regularized once, then kept factorized,
// so evaluation and sampling are safe to call concurrently with per-task
// RNG streams.
class GaussianMixture {
 public:
  GaussianMixture(std::vector<double> weights, std::vector<Eigen::VectorXd> means,
                  std::vector<Eigen::MatrixXd> covariances);

  // Single standard normal component: the prior in standard-normal space.
  static GaussianMixture standard(int dim);

  // Reload of a previously constructed (already regularized) mixture:
  // factorizes as-is so serialized records round-trip exactly. Falls back
  // to the regularizing constructor if factorization fails.
  static GaussianMixture from_regularized(std::vector<double> weights,
                                          std::vector<Eigen::VectorXd> means,
                                          std::vector<Eigen::MatrixXd> covariances);

  int components() const { return static_cast<int>(weights_.size()); }
  int dim() const { return dim_; }
  double weight(int j) const { return weights_[j]; }
  const Eigen::VectorXd& mean(int j) const { return means_[j]; }
  const Eigen::MatrixXd& covariance(int j) const { return covariances_[j]; }

  double log_pdf(const Eigen::VectorXd& x) const;
  Eigen::VectorXd log_pdf_rows(const Eigen::MatrixXd& xs) const;

  Eigen::MatrixXd sample(int n, RngStream& rng) const;

  struct Responsibilities {
    Eigen::VectorXd gamma;  // >= 0, sums to 1
    bool underflowed;       // all components jointly underflowed; gamma is uniform
  };
  Responsibilities responsibilities(const Eigen::VectorXd& x) const;

 private:
  struct TrustedTag {};
  GaussianMixture(TrustedTag, std::vector<double> weights,
                  std::vector<Eigen::VectorXd> means,
                  std::vector<Eigen::MatrixXd> covariances);
  void finalize_components();

  double component_log_pdf(int j, const Eigen::VectorXd& x) const;

  int dim_;
  std::vector<double> weights_;
  std::vector<Eigen::VectorXd> means_;
  std::vector<Eigen::MatrixXd> covariances_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> cholesky_;
  std::vector<double> log_norm_;  // -d/2 log(2pi) - sum(log L_ii) per component
  std::vector<double> cum_weights_;
};

// log(sum(exp(v))) over finite entries; -inf entries are skipped.
double log_sum_exp(const Eigen::VectorXd& v);

}  // namespace rusais

#endif  // RUSAIS_MIXTURE_HPP
