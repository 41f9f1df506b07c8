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

#include "rusais/updating.hpp"

#include <cmath>
#include <sstream>

#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {

void UpdateConfig::validate() const {
  sais().validate();
  if (n1 < n_g || n2 < n_g)
    throw DomainError("UpdateConfig: n1 and n2 must be >= n_g");
  if (!(delta1_thr > 0.0 && delta1_thr < 1.0) ||
      !(delta2_thr > 0.0 && delta2_thr < 1.0))
    throw DomainError("UpdateConfig: CE thresholds must lie in (0,1)");
  if (max_ce_iters < 0) throw DomainError("UpdateConfig: max_ce_iters < 0");
}

UpdateRun update_reliability(const Problem& problem, const UpdateConfig& cfg,
                             const std::optional<WarmStart>& warm,
                             RngStream& rng) {
  cfg.validate();
  EvalCounts counts;

  // Independent sub-streams keep the two estimators independent and the
  // whole run reproducible.
  RngStream prior_rng = rng.spawn(1);
  RngStream num_rng = rng.spawn(2);
  RngStream den_rng = rng.spawn(3);

  const SaisConfig sais_cfg = cfg.sais();
  const CeConfig ce1{cfg.n1, cfg.delta1_thr, cfg.max_ce_iters};
  const CeConfig ce2{cfg.n2, cfg.delta2_thr, cfg.max_ce_iters};

  UpdateRun run;
  CeResult r1{GaussianMixture::standard(problem.dim)};
  CeResult r2{GaussianMixture::standard(problem.dim)};

  if (!warm) {
    const GaussianMixture prior = GaussianMixture::standard(problem.dim);
    Batch b0 = Batch::from_mixture(prior, cfg.n_g, problem, prior_rng);
    run.trace_numerator = run_sais(problem, Target::Numerator, sais_cfg, b0,
                                   prior, counts, num_rng);
    r1 = run_ce(problem, Target::Numerator,
                run.trace_numerator.last_mixture(),
                run.trace_numerator.final_batch, ce1, counts, num_rng);
    run.trace_denominator = run_sais(problem, Target::Denominator, sais_cfg,
                                     b0, prior, counts, den_rng);
    r2 = run_ce(problem, Target::Denominator,
                run.trace_denominator.last_mixture(),
                run.trace_denominator.final_batch, ce2, counts, den_rng);
  } else {
    Batch b0n =
        Batch::from_mixture(warm->numerator, cfg.n_g, problem, num_rng);
    run.trace_numerator = run_sais(problem, Target::Numerator, sais_cfg, b0n,
                                   warm->numerator, counts, num_rng);
    r1 = run_ce(problem, Target::Numerator,
                run.trace_numerator.last_mixture(),
                run.trace_numerator.final_batch, ce1, counts, num_rng);
    Batch b0d =
        Batch::from_mixture(warm->denominator, cfg.n_g, problem, den_rng);
    run.trace_denominator = run_sais(problem, Target::Denominator, sais_cfg,
                                     b0d, warm->denominator, counts, den_rng);
    r2 = run_ce(problem, Target::Denominator,
                run.trace_denominator.last_mixture(),
                run.trace_denominator.final_batch, ce2, counts, den_rng);
  }

  UpdateReport& rep = run.report;
  rep.method = "rusais";
  rep.problem = problem.name;
  rep.i1_hat = r1.i_hat;
  rep.i2_hat = r2.i_hat;
  rep.pf_post_hat = r1.i_hat / r2.i_hat;
  rep.delta1 = r1.delta_hat;
  rep.delta2 = r2.delta_hat;
  rep.m1 = run.trace_numerator.m;
  rep.m2 = run.trace_denominator.m;
  rep.n_ce1 = r1.n_ce;
  rep.n_ce2 = r2.n_ce;
  rep.likelihood_calls = counts.likelihood;
  rep.lsf_calls = counts.lsf;
  rep.seed = rng.seed();
  rep.warm_started = warm.has_value();
  rep.config = cfg;

  cost_summary(rep);  // throws AccountingError on any mismatch
  return run;
}

double ratio_pdf(double t1, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("ratio_pdf: a and b must be > 0");
  const double at = std::sqrt(t1 * t1 / (a * a) + 1.0 / (b * b));
  const double bt = t1 / (a * a) + 1.0 / (b * b);
  const double c = 1.0 / (a * a) + 1.0 / (b * b);
  const double dt = std::exp((bt * bt - c * at * at) / (2.0 * at * at));
  const double phi_gap =
      std_normal_cdf(bt / at) - std_normal_cdf(-bt / at);
  const double first = std::exp(-0.5 * c) / (at * at * M_PI * a * b);
  const double second =
      bt * dt / (at * at * at * std::sqrt(2.0 * M_PI) * a * b) * phi_gap;
  return first + second;
}

RatioStats ratio_stats_mc(double a, double b, long long n, RngStream& rng) {
  if (!(a > 0.0) || !(b > 0.0))
    throw DomainError("ratio_stats_mc: a and b must be > 0");
  if (n < 2) throw DomainError("ratio_stats_mc: n must be >= 2");

  // Welford accumulation; n can be large enough that storing draws is
  // wasteful.
  double mean = 0.0, m2 = 0.0;
  for (long long i = 0; i < n; ++i) {
    const double t = (a * rng.normal() + 1.0) / (b * rng.normal() + 1.0);
    const double d = t - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (t - mean);
  }
  RatioStats s;
  s.a = a;
  s.b = b;
  s.mu_t1 = mean;
  s.sigma_t1 = std::sqrt(m2 / static_cast<double>(n - 1));
  s.cov_t1 = s.sigma_t1 / s.mu_t1;
  return s;
}

std::pair<long long, long long> cost_summary(const UpdateReport& report) {
  if (report.method != "rusais")
    return {report.likelihood_calls, report.lsf_calls};

  const long long n_g = report.config.n_g;
  const long long n1 = report.config.n1;
  const long long n2 = report.config.n2;
  const long long shared = report.warm_started ? 1 : 2;
  const long long likelihood = n_g * (report.m1 + report.m2 - shared) +
                               n1 * (report.n_ce1 + 1) +
                               n2 * (report.n_ce2 + 1);
  const long long lsf = n_g * (report.m1 - 1) + n1 * (report.n_ce1 + 1);

  if (likelihood != report.likelihood_calls || lsf != report.lsf_calls) {
    std::ostringstream os;
    os << "cost_summary: closed form (" << likelihood << ", " << lsf
       << ") != instrumented (" << report.likelihood_calls << ", "
       << report.lsf_calls << ")";
    throw AccountingError(os.str());
  }
  return {likelihood, lsf};
}

}  // namespace rusais
