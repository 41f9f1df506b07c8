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

#ifndef RUSAIS_UPDATING_HPP
#define RUSAIS_UPDATING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "rusais/cross_entropy.hpp"
#include "rusais/problem.hpp"
#include "rusais/sais.hpp"

namespace rusais {

struct UpdateConfig {
  int n_g = 500;
  int k = 10;
  int n1 = 1000;
  int n2 = 1000;
  double delta_w_thr = 1.0;
  double i_f_thr = 0.1;
  double delta1_thr = 0.05;
  double delta2_thr = 0.05;
  int max_steps = 50;
  int max_ce_iters = 20;
  std::uint64_t seed = 0;

  SaisConfig sais() const {
    return SaisConfig{n_g, k, delta_w_thr, i_f_thr, max_steps};
  }
  void validate() const;
};

struct UpdateReport {
  std::string method;
  std::string problem;
  double i1_hat = 0.0;
  double i2_hat = 0.0;
  double pf_post_hat = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  int m1 = 0;   // intermediate density counts (simulation levels for sus)
  int m2 = 0;
  int n_ce1 = 0;
  int n_ce2 = 0;
  long long likelihood_calls = 0;
  long long lsf_calls = 0;
  std::uint64_t seed = 0;
  bool warm_started = false;
  std::string status = "ok";
  UpdateConfig config;
};

// Mixtures to resume a later updating stage from: the last tempering
// mixture of each sub-algorithm of the previous stage.
struct WarmStart {
  GaussianMixture numerator;
  GaussianMixture denominator;
};

struct UpdateRun {
  UpdateReport report;
  SaisTrace trace_numerator;
  SaisTrace trace_denominator;

  WarmStart warm_start() const {
    return WarmStart{trace_numerator.last_mixture(),
                     trace_denominator.last_mixture()};
  }
};

// Full updating pipeline: tempering plus cross-entropy refinement for the
// numerator, then for the denominator (sharing the step-0 prior batch),
// then the ratio. The two estimators draw from independent RNG sub-streams.
// With a warm start each sub-algorithm begins from the supplied mixture
// instead of the prior and draws its own starting batch.
UpdateRun update_reliability(const Problem& problem, const UpdateConfig& cfg,
                             const std::optional<WarmStart>& warm,
                             RngStream& rng);

// Density of T1 = (a U1 + 1)/(b U2 + 1) for independent standard normal
// U1, U2; the distributional model for the ratio estimator.
double ratio_pdf(double t1, double a, double b);

struct RatioStats {
  double a = 0.0;
  double b = 0.0;
  double mu_t1 = 0.0;
  double sigma_t1 = 0.0;  // N-1 divisor
  double cov_t1 = 0.0;
};

// Plain-sampling estimate of the T1 mean and spread; a and b are the COVs
// of the two ratio terms.
RatioStats ratio_stats_mc(double a, double b, long long n, RngStream& rng);

// Recomputes the closed-form likelihood/limit-state call counts from the
// report counters and asserts they equal the instrumented values; returns
// (likelihood_calls, lsf_calls). Reports from other methods pass through
// unchecked. A cold run satisfies
//   likelihood = n_g (m1 + m2 - 2) + n1 (n_ce1 + 1) + n2 (n_ce2 + 1)
// and a warm-started run one n_g more, since the two sub-algorithms cannot
// share a starting batch drawn from different mixtures. lsf is
//   n_g (m1 - 1) + n1 (n_ce1 + 1)
// either way.
std::pair<long long, long long> cost_summary(const UpdateReport& report);

}  // namespace rusais

#endif  // RUSAIS_UPDATING_HPP
