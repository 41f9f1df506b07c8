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

#ifndef RUSAIS_SAIS_HPP
#define RUSAIS_SAIS_HPP

#include <Eigen/Dense>
#include <limits>
#include <memory>
#include <stdexcept>
#include <vector>

#include "rusais/problem.hpp"

namespace rusais {

// Which of the two posterior-failure integrals a density sequence targets:
// the failure-and-observation integral (numerator of the ratio) or the
// plain observation integral (denominator).
enum class Target { Numerator, Denominator };

// One member of the tempering family
//   numerator:   eta(x) = Phi(-g(x)/kappa) * L(x)^lambda * prior(x)
//   denominator: eta(x) =                    L(x)^lambda * prior(x)
// kappa = +inf makes the Phi factor the constant 1/2 (so eta is
// proportional to L^lambda * prior exactly); kappa = 0 is the hard failure
// indicator.
struct IntermediateDensity {
  Target target;
  double kappa = std::numeric_limits<double>::infinity();
  double lambda = 0.0;
};

struct SaisConfig {
  int n_g = 500;            // samples per intermediate step
  int k = 10;               // mixture components
  double delta_w_thr = 1.0; // relative-weight COV threshold
  double i_f_thr = 0.1;     // failure-fraction threshold (numerator stop)
  int max_steps = 50;

  void validate() const;
};

struct SaisStep {
  IntermediateDensity density;
  GaussianMixture mixture;        // p_G^(i), built from the samples below
  Eigen::MatrixXd build_samples;  // drawn from p_G^(i-1)
  Eigen::VectorXd log_eta;        // eta^(i) at build_samples
  // Failed fraction of the batch drawn from `mixture`; NaN for the
  // denominator, whose stopping rule does not look at the limit state.
  double failure_fraction;
};

struct SaisTrace {
  Target target = Target::Numerator;
  std::vector<SaisStep> steps;
  // Number of intermediate densities M: steps+1 for the numerator (the
  // hard-indicator target is the extra member), steps for the denominator.
  int m = 0;
  // The batch drawn from the last mixture, reused as the head of the first
  // cross-entropy population.
  Batch final_batch;

  const GaussianMixture& last_mixture() const { return steps.back().mixture; }
};

// Raised when the stopping rules are not met within max_steps. Carries the
// partial trace for diagnosis.
class SaisNonConvergenceError : public std::runtime_error {
 public:
  SaisNonConvergenceError(const std::string& msg, SaisTrace trace)
      : std::runtime_error(msg),
        trace_(std::make_shared<SaisTrace>(std::move(trace))) {}
  const SaisTrace& partial_trace() const { return *trace_; }

 private:
  std::shared_ptr<SaisTrace> trace_;
};

// log eta at a single point; evaluates the problem functions directly.
double log_eta(const Problem& problem, const IntermediateDensity& d,
               const Eigen::VectorXd& x);

// log eta over a batch from cached values. Requires ensure_g for numerator
// densities with finite kappa and ensure_log_like when lambda > 0.
Eigen::VectorXd log_eta_batch(const IntermediateDensity& d, const Batch& b);

// Estimated COV of the relative weight eta_next/eta_prev under samples
// from the previous mixture, computed entirely in log space. The unknown
// normalization ratio cancels. Returns +inf when eta_next vanishes on the
// whole batch; throws DegenerateInputError when eta_prev does.
double relative_weight_cov(const Eigen::VectorXd& log_eta_prev,
                           const Eigen::VectorXd& log_eta_next,
                           const Eigen::VectorXd& log_pg_prev);

// Bisection on log(kappa) for the kappa with relative-weight COV equal to
// target_cov, holding lambda at d_prev.lambda. Returns 0 when even the
// hard indicator stays within target. Requires cached g (and log L when
// lambda > 0).
double search_kappa(const Batch& b, const IntermediateDensity& d_prev,
                    double target_cov);

// Linear bisection on [d_prev.lambda, 1] for the lambda with
// relative-weight COV equal to target_cov at fixed kappa_next (ignored for
// denominator densities). Returns 1 when the endpoint stays within target,
// which is what triggers termination.
double search_lambda(const Batch& b, const IntermediateDensity& d_prev,
                     double kappa_next, double target_cov);

// Part I of either sub-algorithm: runs the tempering schedule from
// initial_mixture (the prior, or a warm-start mixture from a previous
// stage) until the stopping rules hold. initial_batch must have been drawn
// from initial_mixture; its memoized evaluations are shared with the
// caller, which is what keeps the cost accounting exact when both
// sub-algorithms reuse one prior batch.
SaisTrace run_sais(const Problem& problem, Target target,
                   const SaisConfig& cfg, Batch& initial_batch,
                   const GaussianMixture& initial_mixture, EvalCounts& counts,
                   RngStream& rng);

}  // namespace rusais

#endif  // RUSAIS_SAIS_HPP
