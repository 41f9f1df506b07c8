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

#include "rusais/cross_entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rusais/errors.hpp"
#include "rusais/mixture.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPruneWeight = 1e-6;
// Components whose captured effective sample count falls below this keep
// their previous covariance: a handful of effective points cannot estimate
// one, and a degenerate covariance starves the component in later rounds.
constexpr double kCovarianceEssFloor = 10.0;

Eigen::VectorXd target_log_eta(Target target, const Batch& b) {
  Eigen::VectorXd v = b.log_like + b.log_prior;
  if (target == Target::Numerator) {
    for (int i = 0; i < v.size(); ++i)
      if (b.g[i] > 0.0) v[i] = -kInf;
  }
  return v;
}

// Self-normalized estimate of the cross entropy H(p_opt, gm) from weighted
// samples; diagnostic only.
double cross_entropy_estimate(const Eigen::VectorXd& log_eta,
                              const Eigen::VectorXd& log_gen,
                              const GaussianMixture& gm,
                              const Eigen::MatrixXd& samples) {
  const Eigen::VectorXd lw = log_eta - log_gen;
  const double lse = log_sum_exp(lw);
  if (lse == -kInf) return std::numeric_limits<double>::quiet_NaN();
  double h = 0.0;
  for (int i = 0; i < lw.size(); ++i) {
    if (lw[i] == -kInf) continue;
    h -= std::exp(lw[i] - lse) * gm.log_pdf(samples.row(i).transpose());
  }
  return h;
}

}  // namespace

void CeConfig::validate() const {
  if (n < 2) throw DomainError("CeConfig: n must be >= 2");
  if (!(delta_thr > 0.0)) throw DomainError("CeConfig: delta_thr must be > 0");
  if (max_iters < 0) throw DomainError("CeConfig: max_iters must be >= 0");
}

CeUpdateOutcome ce_update(const GaussianMixture& gm,
                          const Eigen::MatrixXd& samples,
                          const Eigen::VectorXd& log_eta_m,
                          bool use_updated_mean) {
  const int n = static_cast<int>(samples.rows());
  const int k = gm.components();
  const int d = gm.dim();
  if (log_eta_m.size() != n)
    throw DomainError("ce_update: sample/target length mismatch");

  const Eigen::VectorXd log_w = log_eta_m - gm.log_pdf_rows(samples);
  const double shift = log_w.maxCoeff();
  if (shift == -kInf)
    throw ZeroEstimateError("ce_update: all importance weights are zero");

  Eigen::VectorXd w(n);
  for (int i = 0; i < n; ++i)
    w[i] = (log_w[i] == -kInf) ? 0.0 : std::exp(log_w[i] - shift);

  Eigen::MatrixXd gammas(n, k);
  for (int i = 0; i < n; ++i)
    gammas.row(i) = gm.responsibilities(samples.row(i).transpose()).gamma.transpose();

  const Eigen::VectorXd mass = gammas.transpose() * w;  // per-component
  const double total = w.sum();

  CeUpdateOutcome out{gm, false, 0};
  std::vector<double> weights(k);
  std::vector<Eigen::VectorXd> means(k, Eigen::VectorXd::Zero(d));
  std::vector<Eigen::MatrixXd> covs(k, Eigen::MatrixXd::Zero(d, d));

  for (int j = 0; j < k; ++j) {
    weights[j] = mass[j] / total;
    if (mass[j] <= 0.0) {
      means[j] = gm.mean(j);
      covs[j] = gm.covariance(j);
      out.carried_component = true;
      continue;
    }
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(d);
    double mass_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double c = gammas(i, j) * w[i];
      if (c == 0.0) continue;
      mu += c * samples.row(i).transpose();
      mass_sq += c * c;
    }
    mu /= mass[j];
    means[j] = mu;

    const double ess = mass[j] * mass[j] / mass_sq;
    if (ess < kCovarianceEssFloor) {
      covs[j] = gm.covariance(j);
      out.carried_component = true;
      continue;
    }

    const Eigen::VectorXd& center = use_updated_mean ? mu : gm.mean(j);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < n; ++i) {
      const double c = gammas(i, j) * w[i];
      if (c == 0.0) continue;
      const Eigen::VectorXd dev = samples.row(i).transpose() - center;
      cov.noalias() += c * dev * dev.transpose();
    }
    covs[j] = cov / mass[j];
  }

  // Prune near-dead components so their covariances cannot collapse in a
  // later round; keep at least the heaviest one.
  int arg_max = 0;
  for (int j = 1; j < k; ++j)
    if (weights[j] > weights[arg_max]) arg_max = j;
  std::vector<double> pw;
  std::vector<Eigen::VectorXd> pm;
  std::vector<Eigen::MatrixXd> pc;
  for (int j = 0; j < k; ++j) {
    if (weights[j] < kPruneWeight && j != arg_max) {
      ++out.pruned_components;
      continue;
    }
    pw.push_back(weights[j]);
    pm.push_back(means[j]);
    pc.push_back(covs[j]);
  }
  double s = 0.0;
  for (double v : pw) s += v;
  for (double& v : pw) v /= s;

  out.mixture = GaussianMixture(std::move(pw), std::move(pm), std::move(pc));
  return out;
}

IsEstimate is_estimate(const Eigen::VectorXd& log_eta,
                       const Eigen::VectorXd& log_gm) {
  const int n = static_cast<int>(log_eta.size());
  if (log_gm.size() != n) throw DomainError("is_estimate: length mismatch");
  const Eigen::VectorXd log_w = log_eta - log_gm;
  const double shift = log_w.maxCoeff();
  if (shift == -kInf)
    throw ZeroEstimateError("is_estimate: estimate is exactly zero");

  double s1 = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    if (log_w[i] == -kInf) continue;
    const double v = std::exp(log_w[i] - shift);
    s1 += v;
    s2 += v * v;
  }
  const double mean = s1 / n;  // shifted scale
  const double var_of_mean = (s2 / n - mean * mean) / n;

  IsEstimate est;
  est.i_hat = std::exp(shift) * mean;
  est.delta_hat = std::sqrt(std::max(var_of_mean, 0.0)) / mean;
  return est;
}

CeResult run_ce(const Problem& problem, Target target,
                const GaussianMixture& gm0, Batch first_batch,
                const CeConfig& cfg, EvalCounts& counts, RngStream& rng) {
  cfg.validate();
  if (first_batch.size() > cfg.n)
    throw DomainError("run_ce: population smaller than the reused batch");

  // Assemble the first population: the reused tempering batch plus fresh
  // draws from the same mixture.
  Batch population = std::move(first_batch);
  if (population.size() < cfg.n) {
    Batch fresh =
        Batch::from_mixture(gm0, cfg.n - population.size(), problem, rng);
    if (target == Target::Numerator) {
      population.ensure_g(problem, counts);
      fresh.ensure_g(problem, counts);
    }
    population.ensure_log_like(problem, counts);
    fresh.ensure_log_like(problem, counts);
    population = Batch::concat(population, fresh);
  } else {
    if (target == Target::Numerator) population.ensure_g(problem, counts);
    population.ensure_log_like(problem, counts);
  }

  CeResult res{gm0};
  GaussianMixture gm = gm0;
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd log_eta = target_log_eta(target, population);
    const IsEstimate est = is_estimate(log_eta, population.log_pg_prev);
    res.delta_history.push_back(est.delta_hat);
    if (est.delta_hat <= cfg.delta_thr) {
      res.mixture = gm;
      res.i_hat = est.i_hat;
      res.delta_hat = est.delta_hat;
      res.n_ce = iter;
      return res;
    }
    if (iter >= cfg.max_iters) {
      double best = res.delta_history.front();
      for (double v : res.delta_history) best = std::min(best, v);
      std::ostringstream os;
      os << "run_ce: COV " << est.delta_hat << " above threshold "
         << cfg.delta_thr << " after " << cfg.max_iters
         << " updates (best " << best << ")";
      throw CeNonConvergenceError(os.str(), best);
    }

    const CeUpdateOutcome upd =
        ce_update(gm, population.u, log_eta, cfg.use_updated_mean);
    res.carried_component |= upd.carried_component;
    gm = upd.mixture;
    res.cross_entropy_history.push_back(cross_entropy_estimate(
        log_eta, population.log_pg_prev, gm, population.u));

    population = Batch::from_mixture(gm, cfg.n, problem, rng);
    if (target == Target::Numerator) population.ensure_g(problem, counts);
    population.ensure_log_like(problem, counts);
  }
}

}  // namespace rusais
