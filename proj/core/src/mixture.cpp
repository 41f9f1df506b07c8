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

#include "rusais/mixture.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightSumTol = 1e-12;
constexpr double kDiagJitter = 1e-10;
constexpr double kEigenFloor = 1e-8;

}  // namespace

double log_sum_exp(const Eigen::VectorXd& v) {
  double m = -kInf;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] > m) m = v[i];
  if (m == -kInf) return -kInf;
  double s = 0.0;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != -kInf) s += std::exp(v[i] - m);
  return m + std::log(s);
}

GaussianMixture::GaussianMixture(std::vector<double> weights,
                                 std::vector<Eigen::VectorXd> means,
                                 std::vector<Eigen::MatrixXd> covariances)
    : weights_(std::move(weights)),
      means_(std::move(means)),
      covariances_(std::move(covariances)) {
  const std::size_t k = weights_.size();
  if (k == 0 || means_.size() != k || covariances_.size() != k)
    throw DomainError("GaussianMixture: inconsistent component counts");
  dim_ = static_cast<int>(means_[0].size());

  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0 + kWeightSumTol))
      throw DomainError("GaussianMixture: weight outside [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol)
    throw DomainError("GaussianMixture: weights must sum to 1");
  for (double& w : weights_) w /= sum;

  for (std::size_t j = 0; j < k; ++j) {
    if (means_[j].size() != dim_ || covariances_[j].rows() != dim_ ||
        covariances_[j].cols() != dim_)
      throw DomainError("GaussianMixture: component dimension mismatch");
    Eigen::MatrixXd cov =
        0.5 * (covariances_[j] + covariances_[j].transpose());
    cov.diagonal().array() += kDiagJitter * cov.trace() / dim_;
    covariances_[j] = cov;
  }
  finalize_components();
}

GaussianMixture::GaussianMixture(TrustedTag, std::vector<double> weights,
                                 std::vector<Eigen::VectorXd> means,
                                 std::vector<Eigen::MatrixXd> covariances)
    : weights_(std::move(weights)),
      means_(std::move(means)),
      covariances_(std::move(covariances)) {
  const std::size_t k = weights_.size();
  if (k == 0 || means_.size() != k || covariances_.size() != k)
    throw DomainError("GaussianMixture: inconsistent component counts");
  dim_ = static_cast<int>(means_[0].size());
  double sum = 0.0;
  for (double w : weights_) sum += w;
  if (std::abs(sum - 1.0) > 1e-9)
    throw DomainError("GaussianMixture: weights must sum to 1");
  finalize_components();
}

GaussianMixture GaussianMixture::from_regularized(
    std::vector<double> weights, std::vector<Eigen::VectorXd> means,
    std::vector<Eigen::MatrixXd> covariances) {
  try {
    return GaussianMixture(TrustedTag{}, std::move(weights), std::move(means),
                           std::move(covariances));
  } catch (const NumericalError&) {
    // Fall back to the full regularization path.
  }
  return GaussianMixture(std::move(weights), std::move(means),
                         std::move(covariances));
}

void GaussianMixture::finalize_components() {
  const std::size_t k = weights_.size();
  cholesky_.clear();
  log_norm_.clear();
  cum_weights_.clear();
  cholesky_.reserve(k);
  log_norm_.reserve(k);
  cum_weights_.reserve(k);
  double cum = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    Eigen::MatrixXd cov = covariances_[j];
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
      // Floor the spectrum and refactor.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
      Eigen::VectorXd ev = es.eigenvalues().cwiseMax(kEigenFloor);
      cov = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
      llt.compute(cov);
      if (llt.info() != Eigen::Success)
        throw NumericalError(
            "GaussianMixture: covariance not factorizable after "
            "regularization");
      covariances_[j] = cov;
    }
    cholesky_.push_back(llt);
    const Eigen::MatrixXd L = llt.matrixL();
    double log_det_half = 0.0;
    for (int i = 0; i < dim_; ++i) log_det_half += std::log(L(i, i));
    log_norm_.push_back(-0.5 * dim_ * kLogTwoPi - log_det_half);

    cum += weights_[j];
    cum_weights_.push_back(cum);
  }
  cum_weights_.back() = 1.0;
}

GaussianMixture GaussianMixture::standard(int dim) {
  return GaussianMixture({1.0}, {Eigen::VectorXd::Zero(dim)},
                         {Eigen::MatrixXd::Identity(dim, dim)});
}

double GaussianMixture::component_log_pdf(int j, const Eigen::VectorXd& x) const {
  const Eigen::VectorXd z =
      cholesky_[j].matrixL().solve(x - means_[j]);
  return log_norm_[j] - 0.5 * z.squaredNorm();
}

double GaussianMixture::log_pdf(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw DomainError("GaussianMixture::log_pdf: bad dim");
  Eigen::VectorXd terms(components());
  for (int j = 0; j < components(); ++j)
    terms[j] = (weights_[j] > 0.0)
                   ? std::log(weights_[j]) + component_log_pdf(j, x)
                   : -kInf;
  return log_sum_exp(terms);
}

Eigen::VectorXd GaussianMixture::log_pdf_rows(const Eigen::MatrixXd& xs) const {
  Eigen::VectorXd out(xs.rows());
  for (int i = 0; i < xs.rows(); ++i) out[i] = log_pdf(xs.row(i).transpose());
  return out;
}

Eigen::MatrixXd GaussianMixture::sample(int n, RngStream& rng) const {
  if (n < 1) throw DomainError("GaussianMixture::sample: n must be >= 1");
  Eigen::MatrixXd out(n, dim_);
  Eigen::VectorXd z(dim_);
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    int j = 0;
    while (j + 1 < components() && u > cum_weights_[j]) ++j;
    for (int d = 0; d < dim_; ++d) z[d] = rng.normal();
    out.row(i) =
        (means_[j] + Eigen::MatrixXd(cholesky_[j].matrixL()) * z).transpose();
  }
  return out;
}

GaussianMixture::Responsibilities GaussianMixture::responsibilities(
    const Eigen::VectorXd& x) const {
  const int k = components();
  Eigen::VectorXd logs(k);
  double m = -kInf;
  for (int j = 0; j < k; ++j) {
    logs[j] = (weights_[j] > 0.0)
                  ? std::log(weights_[j]) + component_log_pdf(j, x)
                  : -kInf;
    if (logs[j] > m) m = logs[j];
  }
  Responsibilities r;
  r.gamma.resize(k);
  if (m == -kInf) {
    // Joint underflow: such points carry negligible IS weight, report a
    // uniform split instead of NaN.
    r.gamma.setConstant(1.0 / k);
    r.underflowed = true;
    return r;
  }
  double s = 0.0;
  for (int j = 0; j < k; ++j) {
    r.gamma[j] = (logs[j] == -kInf) ? 0.0 : std::exp(logs[j] - m);
    s += r.gamma[j];
  }
  r.gamma /= s;
  r.underflowed = false;
  return r;
}

}  // namespace rusais
