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

#ifndef RUSAIS_CROSS_ENTROPY_HPP
#define RUSAIS_CROSS_ENTROPY_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rusais/problem.hpp"
#include "rusais/sais.hpp"

namespace rusais {

struct CeConfig {
  int n = 1000;             // population per evaluation (N1 or N2)
  double delta_thr = 0.05;  // COV stopping threshold
  int max_iters = 20;
  // Center the covariance update on the freshly updated means. The
  // other variant recenters on the pre-update means; with a component that
  // moves far in one round it degenerates toward a rank-one covariance
  // aligned with the move and can starve a posterior-failure mode, so it
  // is kept only for sensitivity studies.
  bool use_updated_mean = true;

  void validate() const;
};

struct CeUpdateOutcome {
  GaussianMixture mixture;
  // Some component received zero effective weight mass and was carried
  // over unchanged before pruning.
  bool carried_component = false;
  // Components dropped by the small-weight prune.
  int pruned_components = 0;
};

// One cross-entropy parameter update from importance-weighted samples.
// `samples` must be drawn from `gm`; log_eta_m is the target log density
// (up to a constant) at the samples.
CeUpdateOutcome ce_update(const GaussianMixture& gm,
                          const Eigen::MatrixXd& samples,
                          const Eigen::VectorXd& log_eta_m,
                          bool use_updated_mean = true);

struct IsEstimate {
  double i_hat;
  double delta_hat;
};

// Self-normalized-free IS estimate: I = mean(exp(log_eta - log_gm)) with
// its estimated COV, both computed with a max-shift so extreme weights
// cannot overflow. Throws ZeroEstimateError when every weight is zero.
IsEstimate is_estimate(const Eigen::VectorXd& log_eta,
                       const Eigen::VectorXd& log_gm);

struct CeResult {
  GaussianMixture mixture;  // final ISD
  double i_hat = 0.0;
  double delta_hat = 0.0;
  int n_ce = 0;  // number of update+resample rounds
  std::vector<double> delta_history;          // COV after each evaluation
  std::vector<double> cross_entropy_history;  // diagnostic H-hat estimates
  bool carried_component = false;
};

class CeNonConvergenceError : public std::runtime_error {
 public:
  CeNonConvergenceError(const std::string& msg, double best_delta)
      : std::runtime_error(msg), best_delta_(best_delta) {}
  double best_delta() const { return best_delta_; }

 private:
  double best_delta_;
};

// Part II of either sub-algorithm. first_batch holds the n_g samples
// reused from the last tempering step (limit state already evaluated for
// the numerator); (n - n_g) fresh samples complete the first population.
// Iterates ce_update, drawing n fresh samples per round, until the
// estimator COV drops below delta_thr. The numerator target uses the hard
// failure indicator.
CeResult run_ce(const Problem& problem, Target target,
                const GaussianMixture& gm0, Batch first_batch,
                const CeConfig& cfg, EvalCounts& counts, RngStream& rng);

}  // namespace rusais

#endif  // RUSAIS_CROSS_ENTROPY_HPP
