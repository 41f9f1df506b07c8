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

#include <limits>

#include "rusais/baselines.hpp"
#include "rusais/cross_entropy.hpp"
#include "rusais/errors.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Numerator weights I[g<=0] L against prior draws, as log values; both
// estimates reuse the generic IS estimator with the prior as the ISD.
Eigen::VectorXd numerator_log_eta(const Batch& b) {
  Eigen::VectorXd v = b.log_like + b.log_prior;
  for (int i = 0; i < v.size(); ++i)
    if (b.g[i] > 0.0) v[i] = -kInf;
  return v;
}

}  // namespace

UpdateReport crude_mcs_update(const Problem& problem, long long n,
                              RngStream& rng, bool shared_batch) {
  if (n < 1) throw DomainError("crude_mcs_update: n must be >= 1");
  EvalCounts counts;
  const GaussianMixture prior = GaussianMixture::standard(problem.dim);

  Batch num_batch =
      Batch::from_mixture(prior, static_cast<int>(n), problem, rng);
  num_batch.ensure_g(problem, counts);
  num_batch.ensure_log_like(problem, counts);

  const IsEstimate e1 =
      is_estimate(numerator_log_eta(num_batch), num_batch.log_prior);

  IsEstimate e2{};
  if (shared_batch) {
    e2 = is_estimate(num_batch.log_like + num_batch.log_prior,
                     num_batch.log_prior);
  } else {
    Batch den_batch =
        Batch::from_mixture(prior, static_cast<int>(n), problem, rng);
    den_batch.ensure_log_like(problem, counts);
    e2 = is_estimate(den_batch.log_like + den_batch.log_prior,
                     den_batch.log_prior);
  }

  UpdateReport rep;
  rep.method = "mcs";
  rep.problem = problem.name;
  rep.i1_hat = e1.i_hat;
  rep.i2_hat = e2.i_hat;
  rep.pf_post_hat = e1.i_hat / e2.i_hat;
  rep.delta1 = e1.delta_hat;
  rep.delta2 = e2.delta_hat;
  rep.likelihood_calls = counts.likelihood;
  rep.lsf_calls = counts.lsf;
  rep.seed = rng.seed();
  return rep;
}

}  // namespace rusais
