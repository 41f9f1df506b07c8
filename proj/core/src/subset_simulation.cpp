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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "rusais/baselines.hpp"
#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTargetAcceptance = 0.44;

using EventFn = std::function<double(const Eigen::VectorXd&)>;

struct LevelInfo {
  double threshold;
  double cond_prob;
  double delta;
};

struct EventResult {
  double p_hat;
  std::vector<LevelInfo> levels;
  double delta_total;
};

// Population with the chain layout needed for the correlation factor:
// chain-major ordering, uniform chain length; chains == 0 marks an
// independent (level-0) population.
struct Population {
  Eigen::MatrixXd x;
  Eigen::VectorXd g;
  int chains = 0;
  int steps = 0;
};

// Au-Beck correlation factor gamma for the indicator I(g <= b) over the
// population chains; 0 for independent populations.
double chain_gamma(const Population& pop, double b) {
  if (pop.chains == 0 || pop.steps < 2) return 0.0;
  const int nc = pop.chains, m = pop.steps;
  const int n = nc * m;
  double p = 0.0;
  for (int i = 0; i < n; ++i) p += (pop.g[i] <= b) ? 1.0 : 0.0;
  p /= n;
  const double var = p - p * p;
  if (var <= 0.0) return 0.0;

  double gamma = 0.0;
  for (int k = 1; k < m; ++k) {
    double corr = 0.0;
    for (int j = 0; j < nc; ++j) {
      for (int l = 0; l + k < m; ++l) {
        const bool a = pop.g[j * m + l] <= b;
        const bool c = pop.g[j * m + l + k] <= b;
        corr += (a && c) ? 1.0 : 0.0;
      }
    }
    corr = corr / (n - k * nc) - p * p;
    gamma += 2.0 * (1.0 - static_cast<double>(k) / m) * (corr / var);
  }
  return std::max(gamma, 0.0);
}

// Adaptive conditional sampling: per-coordinate correlated normal
// proposals that leave the standard normal invariant, accepted when the
// event function stays at or below the threshold. The global scaling is
// adapted toward ~44% acceptance between chain batches.
Population acs_level(const Eigen::MatrixXd& seeds,
                     const Eigen::VectorXd& g_seeds, double b,
                     const EventFn& G, int steps, RngStream& rng) {
  const int nc = static_cast<int>(seeds.rows());
  const int dim = static_cast<int>(seeds.cols());

  Eigen::VectorXd sigma_hat(dim);
  const Eigen::RowVectorXd mean = seeds.colwise().mean();
  for (int d = 0; d < dim; ++d) {
    const double var =
        (seeds.col(d).array() - mean[d]).square().sum() / nc;
    sigma_hat[d] = std::sqrt(std::max(var, 1e-12));
  }

  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  for (int i = nc - 1; i > 0; --i)
    std::swap(order[i], order[rng.index(i + 1)]);

  Population pop;
  pop.chains = nc;
  pop.steps = steps;
  pop.x.resize(nc * steps, dim);
  pop.g.resize(nc * steps);

  double lambda = 0.6;
  const int batch = std::max(1, nc / 10);
  int accepted = 0, proposed = 0, batch_index = 1;

  Eigen::VectorXd sigma(dim), rho(dim), cand(dim);
  auto refresh_scales = [&]() {
    for (int d = 0; d < dim; ++d) {
      sigma[d] = std::min(1.0, lambda * sigma_hat[d]);
      rho[d] = std::sqrt(1.0 - sigma[d] * sigma[d]);
    }
  };
  refresh_scales();

  for (int c = 0; c < nc; ++c) {
    Eigen::VectorXd x = seeds.row(order[c]).transpose();
    double gx = g_seeds[order[c]];
    pop.x.row(c * steps) = x.transpose();
    pop.g[c * steps] = gx;
    for (int s = 1; s < steps; ++s) {
      for (int d = 0; d < dim; ++d)
        cand[d] = rho[d] * x[d] + sigma[d] * rng.normal();
      const double gc = G(cand);
      ++proposed;
      if (gc <= b) {
        x = cand;
        gx = gc;
        ++accepted;
      }
      pop.x.row(c * steps + s) = x.transpose();
      pop.g[c * steps + s] = gx;
    }
    if ((c + 1) % batch == 0 && proposed > 0) {
      const double rate = static_cast<double>(accepted) / proposed;
      lambda *= std::exp((rate - kTargetAcceptance) /
                         std::sqrt(static_cast<double>(batch_index)));
      refresh_scales();
      accepted = proposed = 0;
      ++batch_index;
    }
  }
  return pop;
}

EventResult sus_event(const EventFn& G, int dim, int n, double p0,
                      int max_levels, RngStream& rng) {
  EventResult res;
  const int nc = std::max(1, static_cast<int>(std::lround(p0 * n)));
  const int steps = n / nc;
  const int n_eff = nc * steps;

  Population pop;
  pop.chains = 0;
  pop.x.resize(n_eff, dim);
  pop.g.resize(n_eff);
  for (int i = 0; i < n_eff; ++i) {
    for (int d = 0; d < dim; ++d) pop.x(i, d) = rng.normal();
    pop.g[i] = G(pop.x.row(i).transpose());
  }

  double log_p = 0.0;
  for (int level = 0; level < max_levels; ++level) {
    std::vector<int> idx(n_eff);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b2) { return pop.g[a] < pop.g[b2]; });
    const double b = 0.5 * (pop.g[idx[nc - 1]] + pop.g[idx[nc]]);

    if (b <= 0.0 || level == max_levels - 1) {
      int count0 = 0;
      for (int i = 0; i < n_eff; ++i)
        if (pop.g[i] <= 0.0) ++count0;
      const double p = static_cast<double>(count0) / n_eff;
      const double gamma = chain_gamma(pop, 0.0);
      const double delta =
          (p > 0.0) ? std::sqrt((1.0 - p) / (p * n_eff) * (1.0 + gamma))
                    : kInf;
      res.levels.push_back(LevelInfo{0.0, p, delta});
      log_p += (p > 0.0) ? std::log(p) : -kInf;
      break;
    }

    const double p = static_cast<double>(nc) / n_eff;
    const double gamma = chain_gamma(pop, b);
    res.levels.push_back(LevelInfo{
        b, p, std::sqrt((1.0 - p) / (p * n_eff) * (1.0 + gamma))});
    log_p += std::log(p);

    Eigen::MatrixXd seeds(nc, dim);
    Eigen::VectorXd g_seeds(nc);
    for (int i = 0; i < nc; ++i) {
      seeds.row(i) = pop.x.row(idx[i]);
      g_seeds[i] = pop.g[idx[i]];
    }
    pop = acs_level(seeds, g_seeds, b, G, steps, rng);
  }

  res.p_hat = std::exp(log_p);
  double d2 = 0.0;
  for (const auto& l : res.levels) d2 += l.delta * l.delta;
  res.delta_total = std::sqrt(d2);
  return res;
}

}  // namespace

void SusConfig::validate() const {
  if (!(p0 > 0.0 && p0 < 1.0)) throw DomainError("SusConfig: p0 must be in (0,1)");
  if (samples_per_level < 10)
    throw DomainError("SusConfig: samples_per_level too small");
  if (pilot_samples < 1) throw DomainError("SusConfig: pilot_samples < 1");
  if (max_levels < 1) throw DomainError("SusConfig: max_levels < 1");
}

UpdateReport subset_simulation_update(const Problem& problem,
                                      const SusConfig& cfg, RngStream& rng) {
  cfg.validate();
  long long likelihood_calls = 0, lsf_calls = 0;
  const int dim = problem.dim;

  double log_c;
  if (cfg.c_mult) {
    if (!(*cfg.c_mult > 0.0)) throw DomainError("SusConfig: c_mult must be > 0");
    log_c = std::log(*cfg.c_mult);
  } else {
    // Pilot: c = 1 / max L over prior draws.
    RngStream pilot_rng = rng.spawn(101);
    double max_ll = -kInf;
    Eigen::VectorXd x(dim);
    for (int i = 0; i < cfg.pilot_samples; ++i) {
      for (int d = 0; d < dim; ++d) x[d] = pilot_rng.normal();
      max_ll = std::max(max_ll, problem.log_likelihood(x));
      ++likelihood_calls;
    }
    if (max_ll == -kInf)
      throw DegenerateInputError(
          "subset_simulation_update: pilot found no support");
    log_c = -max_ll;
  }

  EventResult r1, r2;
  for (int attempt = 0;; ++attempt) {
    double max_log_cl = -kInf;  // violation monitor for c L <= 1

    auto intersect_event = [&](const Eigen::VectorXd& xu) {
      const Eigen::VectorXd x = xu.head(dim);
      const double g = problem.limit_state(x);
      ++lsf_calls;
      const double ll = problem.log_likelihood(x);
      ++likelihood_calls;
      const double lcl = log_c + ll;
      max_log_cl = std::max(max_log_cl, lcl);
      const double h = std_normal_log_cdf(xu[dim]) - lcl;
      return std::max(g, h);
    };
    auto observation_event = [&](const Eigen::VectorXd& xu) {
      const Eigen::VectorXd x = xu.head(dim);
      const double ll = problem.log_likelihood(x);
      ++likelihood_calls;
      const double lcl = log_c + ll;
      max_log_cl = std::max(max_log_cl, lcl);
      return std_normal_log_cdf(xu[dim]) - lcl;
    };

    RngStream rng1 = rng.spawn(201 + 2 * attempt);
    RngStream rng2 = rng.spawn(202 + 2 * attempt);
    r1 = sus_event(intersect_event, dim + 1, cfg.samples_per_level, cfg.p0,
                   cfg.max_levels, rng1);
    r2 = sus_event(observation_event, dim + 1, cfg.samples_per_level, cfg.p0,
                   cfg.max_levels, rng2);

    if (max_log_cl <= 0.0) break;
    if (attempt >= 1)
      throw DomainError(
          "subset_simulation_update: c L <= 1 violated after rescaling; "
          "supply a smaller c_mult");
    log_c -= max_log_cl;  // rescale by the violation ratio, retry once
  }

  UpdateReport rep;
  rep.method = "sus";
  rep.problem = problem.name;
  rep.i1_hat = std::exp(std::log(r1.p_hat) - log_c);
  rep.i2_hat = std::exp(std::log(r2.p_hat) - log_c);
  rep.pf_post_hat = r1.p_hat / r2.p_hat;
  rep.delta1 = r1.delta_total;
  rep.delta2 = r2.delta_total;
  rep.m1 = static_cast<int>(r1.levels.size());
  rep.m2 = static_cast<int>(r2.levels.size());
  rep.likelihood_calls = likelihood_calls;
  rep.lsf_calls = lsf_calls;
  rep.seed = rng.seed();
  return rep;
}

long long sus_level_budget(double delta_target, int levels, double gamma_corr,
                           double p0) {
  if (!(delta_target > 0.0) || levels < 1 || gamma_corr < 0.0 ||
      !(p0 > 0.0 && p0 < 1.0))
    throw DomainError("sus_level_budget: bad arguments");
  const double delta_i2 = delta_target * delta_target / levels;
  return static_cast<long long>(
      std::ceil((1.0 + gamma_corr) * (1.0 - p0) / (p0 * delta_i2)));
}

}  // namespace rusais
