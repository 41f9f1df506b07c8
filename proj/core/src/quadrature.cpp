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

#include <cmath>
#include <functional>
#include <vector>

#include "rusais/baselines.hpp"
#include "rusais/errors.hpp"

namespace rusais {
namespace {

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int kGlPoints = 16;
constexpr double kGlX[kGlPoints / 2] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499};
constexpr double kGlW[kGlPoints / 2] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541};

using Fn1d = std::function<double(double)>;

double gl_panel(const Fn1d& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < kGlPoints / 2; ++i)
    acc += kGlW[i] * (f(mid - half * kGlX[i]) + f(mid + half * kGlX[i]));
  return half * acc;
}

double gl_composite(const Fn1d& f, double a, double b, int panels) {
  if (b <= a) return 0.0;
  const double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p)
    acc += gl_panel(f, a + p * h, a + (p + 1) * h);
  return acc;
}

struct OracleContext {
  const Problem* problem;
  double bound;
  int grid;
  int indicator_axis;        // original coordinate resolved innermost
  std::vector<int> axis_of;  // nesting level -> original coordinate
  bool with_indicator;
};

double eval_integrand(const OracleContext& ctx, const Eigen::VectorXd& x) {
  const double ll = ctx.problem->log_likelihood(x);
  return std::exp(ll + ctx.problem->log_prior(x));
}

// Integral along the innermost axis. With the indicator active, locate the
// limit-state sign changes by scan and bisection and integrate only over
// the failed segments, so panels never straddle the discontinuity.
double innermost_integral(const OracleContext& ctx, Eigen::VectorXd& x) {
  const int axis = ctx.axis_of.back();
  const double b = ctx.bound;
  auto f = [&](double t) {
    x[axis] = t;
    return eval_integrand(ctx, x);
  };

  if (!ctx.with_indicator) return gl_composite(f, -b, b, ctx.grid);

  auto g = [&](double t) {
    x[axis] = t;
    return ctx.problem->limit_state(x);
  };

  const int scan = std::max(4 * ctx.grid, 128);
  std::vector<double> roots;
  double t_prev = -b;
  bool failed_prev = g(t_prev) <= 0.0;
  const bool failed_at_start = failed_prev;
  for (int i = 1; i <= scan; ++i) {
    const double t = -b + (2.0 * b) * i / scan;
    const bool failed = g(t) <= 0.0;
    if (failed != failed_prev) {
      double lo = t_prev, hi = t;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((g(mid) <= 0.0) == failed_prev ? lo : hi) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
      failed_prev = failed;
    }
    t_prev = t;
  }

  // Walk the alternating segments, integrating the failed ones.
  const double panel_h = 2.0 * b / ctx.grid;
  double acc = 0.0;
  bool failed = failed_at_start;
  double seg_start = -b;
  for (std::size_t r = 0; r <= roots.size(); ++r) {
    const double seg_end = (r < roots.size()) ? roots[r] : b;
    if (failed && seg_end > seg_start) {
      const int panels = std::max(
          1, static_cast<int>(std::ceil((seg_end - seg_start) / panel_h)));
      acc += gl_composite(f, seg_start, seg_end, panels);
    }
    seg_start = seg_end;
    failed = !failed;
  }
  return acc;
}

double nested_integral(const OracleContext& ctx, Eigen::VectorXd& x,
                       int level) {
  if (level + 1 == static_cast<int>(ctx.axis_of.size()))
    return innermost_integral(ctx, x);
  const int axis = ctx.axis_of[level];
  auto f = [&](double t) {
    x[axis] = t;
    return nested_integral(ctx, x, level + 1);
  };
  return gl_composite(f, -ctx.bound, ctx.bound, ctx.grid);
}

// The axis along which the limit state moves fastest resolves the failure
// indicator best; estimated by central differences at a few probe points.
int pick_indicator_axis(const Problem& problem, double bound) {
  const int d = problem.dim;
  Eigen::VectorXd slope = Eigen::VectorXd::Zero(d);
  const double h = 1e-4 * bound;
  std::vector<Eigen::VectorXd> probes;
  probes.push_back(Eigen::VectorXd::Zero(d));
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd p = Eigen::VectorXd::Zero(d);
    p[i] = 0.25 * bound;
    probes.push_back(p);
    probes.push_back(-p);
  }
  for (const auto& p : probes) {
    Eigen::VectorXd q = p;
    for (int i = 0; i < d; ++i) {
      q[i] = p[i] + h;
      const double g_hi = problem.limit_state(q);
      q[i] = p[i] - h;
      const double g_lo = problem.limit_state(q);
      q[i] = p[i];
      slope[i] += std::abs(g_hi - g_lo);
    }
  }
  int best = 0;
  for (int i = 1; i < d; ++i)
    if (slope[i] > slope[best]) best = i;
  return best;
}

double run_pass(const Problem& problem, double bound, int grid,
                int indicator_axis, bool with_indicator) {
  OracleContext ctx;
  ctx.problem = &problem;
  ctx.bound = bound;
  ctx.grid = grid;
  ctx.indicator_axis = indicator_axis;
  ctx.with_indicator = with_indicator;
  for (int i = 0; i < problem.dim; ++i)
    if (i != indicator_axis) ctx.axis_of.push_back(i);
  ctx.axis_of.push_back(indicator_axis);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(problem.dim);
  return nested_integral(ctx, x, 0);
}

}  // namespace

OracleResult quadrature_oracle(const Problem& problem, double bound, int grid,
                               double rel_tol) {
  if (problem.dim > 3)
    throw DomainError("quadrature_oracle: dim must be <= 3");
  if (!(bound > 0.0) || grid < 4)
    throw DomainError("quadrature_oracle: bad bound or grid");

  const int axis = pick_indicator_axis(problem, bound);

  OracleResult res;
  constexpr int kMaxRefinements = 5;
  double i1_prev = 0.0, i2_prev = 0.0;
  bool i1_done = false, i2_done = false;
  int g = grid;
  for (int pass = 0; pass < kMaxRefinements; ++pass, g *= 2) {
    if (!i2_done) {
      const double i2 = run_pass(problem, bound, g, axis, false);
      if (pass > 0 && std::abs(i2 - i2_prev) <= rel_tol * std::abs(i2)) {
        res.i2 = i2;
        res.rel_err_i2 = std::abs(i2 - i2_prev) / std::abs(i2);
        i2_done = true;
      }
      i2_prev = i2;
    }
    if (!i1_done) {
      const double i1 = run_pass(problem, bound, g, axis, true);
      if (pass > 0 && std::abs(i1 - i1_prev) <= rel_tol * std::abs(i1)) {
        res.i1 = i1;
        res.rel_err_i1 = std::abs(i1 - i1_prev) / std::abs(i1);
        i1_done = true;
      }
      i1_prev = i1;
    }
    if (i1_done && i2_done) return res;
  }
  throw NumericalError(
      "quadrature_oracle: grid refinement did not converge to the requested "
      "tolerance");
}

}  // namespace rusais
