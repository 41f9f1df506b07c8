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

#include "rusais/sais.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "rusais/clustering.hpp"
#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kKappaFloor = 1e-6;
constexpr int kBisectIterations = 60;
constexpr double kCovRelTol = 1e-3;
constexpr int kFallbackProbes = 17;

double smooth_indicator_log(double g, double kappa) {
  if (std::isinf(kappa)) return std::log(0.5);  // Phi(0) exactly
  if (kappa == 0.0) return (g <= 0.0) ? 0.0 : -kInf;
  return std_normal_log_cdf(-g / kappa);
}

}  // namespace

void SaisConfig::validate() const {
  if (n_g < 2) throw DomainError("SaisConfig: n_g must be >= 2");
  if (k < 1) throw DomainError("SaisConfig: k must be >= 1");
  if (!(delta_w_thr > 0.0)) throw DomainError("SaisConfig: delta_w_thr must be > 0");
  if (!(i_f_thr > 0.0 && i_f_thr < 1.0))
    throw DomainError("SaisConfig: i_f_thr must lie in (0,1)");
  if (max_steps < 1) throw DomainError("SaisConfig: max_steps must be >= 1");
}

double log_eta(const Problem& problem, const IntermediateDensity& d,
               const Eigen::VectorXd& x) {
  double v = problem.log_prior(x);
  if (d.lambda != 0.0) v += d.lambda * problem.log_likelihood(x);
  if (d.target == Target::Numerator)
    v += smooth_indicator_log(problem.limit_state(x), d.kappa);
  return v;
}

Eigen::VectorXd log_eta_batch(const IntermediateDensity& d, const Batch& b) {
  const bool needs_g = d.target == Target::Numerator && !std::isinf(d.kappa);
  if (needs_g && !b.has_g)
    throw DomainError("log_eta_batch: limit state not evaluated on batch");
  if (d.lambda != 0.0 && !b.has_log_like)
    throw DomainError("log_eta_batch: likelihood not evaluated on batch");

  Eigen::VectorXd v = b.log_prior;
  if (d.lambda != 0.0) v += d.lambda * b.log_like;
  if (d.target == Target::Numerator) {
    if (std::isinf(d.kappa)) {
      v.array() += std::log(0.5);
    } else {
      for (int i = 0; i < v.size(); ++i)
        v[i] += smooth_indicator_log(b.g[i], d.kappa);
    }
  }
  return v;
}

double relative_weight_cov(const Eigen::VectorXd& log_eta_prev,
                           const Eigen::VectorXd& log_eta_next,
                           const Eigen::VectorXd& log_pg_prev) {
  const int n = static_cast<int>(log_eta_prev.size());
  if (log_eta_next.size() != n || log_pg_prev.size() != n)
    throw DomainError("relative_weight_cov: length mismatch");

  const Eigen::VectorXd lw1 = log_eta_prev - log_pg_prev;
  const double lse1 = log_sum_exp(lw1);
  if (lse1 == -kInf)
    throw DegenerateInputError("relative_weight_cov: all weights are zero");

  const double log_mu = log_sum_exp(log_eta_next - log_pg_prev) - lse1;
  if (log_mu == -kInf) return kInf;  // next density vanishes on the batch

  // delta^2 = sum_k wbar1_k (omega_r_k / mu - 1)^2, accumulated in log
  // space so that enormous individual relative weights cannot overflow.
  Eigen::VectorXd log_terms(n);
  int kept = 0;
  for (int i = 0; i < n; ++i) {
    if (lw1[i] == -kInf) continue;  // zero omega_1 weight
    const double a = lw1[i] - lse1;
    double lt;
    if (log_eta_next[i] == -kInf) {
      lt = a;  // omega_r = 0, (0/mu - 1)^2 = 1
    } else {
      const double s = (log_eta_next[i] - log_eta_prev[i]) - log_mu;
      if (s == 0.0) continue;
      const double log_dev = (s > 40.0) ? s : std::log(std::abs(std::expm1(s)));
      lt = a + 2.0 * log_dev;
    }
    log_terms[kept++] = lt;
  }
  if (kept == 0) return 0.0;
  return std::exp(0.5 * log_sum_exp(log_terms.head(kept)));
}

namespace {

double cov_at(const Batch& b, const Eigen::VectorXd& log_eta_prev,
              const IntermediateDensity& cand) {
  return relative_weight_cov(log_eta_prev, log_eta_batch(cand, b),
                             b.log_pg_prev);
}

}  // namespace

double search_kappa(const Batch& b, const IntermediateDensity& d_prev,
                    double target_cov) {
  if (d_prev.target != Target::Numerator)
    throw DomainError("search_kappa: numerator densities only");
  if (!(target_cov > 0.0)) throw DomainError("search_kappa: target must be > 0");

  const Eigen::VectorXd log_eta_prev = log_eta_batch(d_prev, b);
  IntermediateDensity cand{Target::Numerator, 0.0, d_prev.lambda};
  auto cov = [&](double kappa) {
    cand.kappa = kappa;
    return cov_at(b, log_eta_prev, cand);
  };

  // Hard-indicator boundary: when even kappa = 0 stays within the target,
  // the schedule jumps to it.
  if (cov(0.0) <= target_cov) return 0.0;

  // Upper end of the bracket. kappa_prev = +inf (first step) starts from a
  // data-independent guess and expands; the COV decays to 0 as kappa grows.
  double hi = d_prev.kappa;
  if (std::isinf(hi)) {
    hi = 1e4;
    while (cov(hi) > target_cov && hi < 1e30) hi *= 100.0;
  }
  double f_hi = cov(hi) - target_cov;
  double lo = std::min(kKappaFloor, hi);
  double f_lo = cov(lo) - target_cov;
  if (f_lo <= 0.0) return lo;  // indicator-equivalent floor
  if (f_hi > 0.0) {
    // cov(kappa_prev) should be zero by construction; scan for a usable
    // bracket before giving up.
    double probe_hi = kNan;
    for (int i = kFallbackProbes; i >= 1; --i) {
      const double s = std::log(lo) +
                       (std::log(hi) - std::log(lo)) * i / (kFallbackProbes + 1.0);
      const double kappa = std::exp(s);
      if (cov(kappa) <= target_cov) {
        probe_hi = kappa;
        break;
      }
    }
    if (std::isnan(probe_hi)) {
      std::ostringstream os;
      os << "search_kappa: no bracket in [" << lo << ", " << hi
         << "]; cov(lo)=" << cov(lo) << " cov(hi)=" << cov(hi)
         << " target=" << target_cov;
      throw SearchFailureError(os.str());
    }
    hi = probe_hi;
  }

  double s_lo = std::log(lo), s_hi = std::log(hi);
  double kappa = hi;
  for (int it = 0; it < kBisectIterations; ++it) {
    const double s_mid = 0.5 * (s_lo + s_hi);
    kappa = std::exp(s_mid);
    const double c = cov(kappa);
    if (std::abs(c - target_cov) <= kCovRelTol * target_cov) return kappa;
    (c > target_cov ? s_lo : s_hi) = s_mid;
  }
  return kappa;
}

double search_lambda(const Batch& b, const IntermediateDensity& d_prev,
                     double kappa_next, double target_cov) {
  if (!(target_cov > 0.0)) throw DomainError("search_lambda: target must be > 0");
  const Eigen::VectorXd log_eta_prev = log_eta_batch(d_prev, b);
  IntermediateDensity cand{d_prev.target, kappa_next, d_prev.lambda};
  auto cov = [&](double lambda) {
    cand.lambda = lambda;
    return cov_at(b, log_eta_prev, cand);
  };

  // Boundary rule: lambda = 1 within target terminates the schedule.
  if (cov(1.0) <= target_cov) return 1.0;

  double lo = d_prev.lambda;
  double f_lo = cov(lo) - target_cov;
  double hi = 1.0;
  if (f_lo >= 0.0) {
    // The kappa move should have left slack (it targeted half the
    // threshold); scan for a bracket before giving up.
    double probe_lo = kNan;
    for (int i = 1; i <= kFallbackProbes; ++i) {
      const double lambda = lo + (hi - lo) * i / (kFallbackProbes + 1.0);
      if (cov(lambda) < target_cov) {
        probe_lo = lambda;
        break;
      }
    }
    if (std::isnan(probe_lo)) {
      std::ostringstream os;
      os << "search_lambda: no bracket in [" << lo << ", 1]; cov(lo)="
         << cov(lo) << " cov(1)=" << cov(1.0) << " target=" << target_cov;
      throw SearchFailureError(os.str());
    }
    lo = probe_lo;
  }

  double lambda = 1.0;
  for (int it = 0; it < kBisectIterations; ++it) {
    lambda = 0.5 * (lo + hi);
    const double c = cov(lambda);
    if (std::abs(c - target_cov) <= kCovRelTol * target_cov) return lambda;
    (c > target_cov ? hi : lo) = lambda;
  }
  return lambda;
}

SaisTrace run_sais(const Problem& problem, Target target,
                   const SaisConfig& cfg, Batch& initial_batch,
                   const GaussianMixture& initial_mixture, EvalCounts& counts,
                   RngStream& rng) {
  cfg.validate();
  if (initial_batch.size() != cfg.n_g)
    throw DomainError("run_sais: initial batch size differs from n_g");

  SaisTrace trace;
  trace.target = target;

  std::optional<Batch> owned;
  Batch* cur = &initial_batch;
  IntermediateDensity d_prev{target, kInf, 0.0};

  for (int step = 1; step <= cfg.max_steps; ++step) {
    IntermediateDensity d_next = d_prev;
    if (target == Target::Numerator) {
      cur->ensure_g(problem, counts);
      cur->ensure_log_like(problem, counts);
      if (d_prev.lambda >= 1.0) {
        // Ordering rule: once lambda saturates only kappa moves, now
        // against the full threshold.
        d_next.kappa = search_kappa(*cur, d_prev, cfg.delta_w_thr);
        d_next.lambda = 1.0;
      } else if (d_prev.kappa == 0.0) {
        // Once kappa hits the indicator only lambda moves.
        d_next.lambda = search_lambda(*cur, d_prev, 0.0, cfg.delta_w_thr);
        d_next.kappa = 0.0;
      } else {
        // First kappa to half threshold, then lambda to the full one.
        d_next.kappa = search_kappa(*cur, d_prev, 0.5 * cfg.delta_w_thr);
        d_next.lambda =
            search_lambda(*cur, d_prev, d_next.kappa, cfg.delta_w_thr);
      }
    } else {
      cur->ensure_log_like(problem, counts);
      d_next.lambda = search_lambda(*cur, d_prev, kNan, cfg.delta_w_thr);
    }

    const Eigen::VectorXd log_eta_i = log_eta_batch(d_next, *cur);
    GaussianMixture gm =
        build_mixture(cur->u, log_eta_i - cur->log_pg_prev, cfg.k, rng);
    Batch next = Batch::from_mixture(gm, cfg.n_g, problem, rng);

    double fail_frac = kNan;
    bool stop;
    if (target == Target::Numerator) {
      next.ensure_g(problem, counts);
      fail_frac =
          static_cast<double>((next.g.array() <= 0.0).count()) / cfg.n_g;
      stop = d_next.lambda >= 1.0 && fail_frac >= cfg.i_f_thr;
    } else {
      stop = d_next.lambda >= 1.0;
    }

    trace.steps.push_back(
        SaisStep{d_next, gm, cur->u, log_eta_i, fail_frac});

    if (stop) {
      trace.m = (target == Target::Numerator) ? step + 1 : step;
      trace.final_batch = std::move(next);
      return trace;
    }
    owned = std::move(next);
    cur = &*owned;
    d_prev = d_next;
  }

  std::ostringstream os;
  os << "run_sais: stopping rules not met within " << cfg.max_steps
     << " steps (" << (target == Target::Numerator ? "numerator" : "denominator")
     << ")";
  throw SaisNonConvergenceError(os.str(), std::move(trace));
}

}  // namespace rusais
