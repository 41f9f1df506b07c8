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

#include "rusais/problems.hpp"

#include <cmath>
#include <memory>

#include "rusais/errors.hpp"
#include "rusais/truss.hpp"

namespace rusais::problems {
namespace {

double square(double v) { return v * v; }

}  // namespace

Problem example1_problem() {
  Problem p;
  p.name = "example1";
  p.dim = 2;
  p.transform = Transform::all_standard_normal(2);
  p.limit_state = [](const Eigen::VectorXd& x) {
    return 5.0 - x[1] - 0.5 * square(x[0] - 0.1);
  };
  // Two response observations: s1 = x2 - 1.4 x1 measured 1.6 (err std 0.8)
  // and s2 = x1^2 + 4.4 x1 - x2 measured 2.4 (err std 1.0).
  p.log_likelihood = [](const Eigen::VectorXd& x) {
    const double r1 = (x[1] - 1.4 * x[0] - 1.6) / 0.8;
    const double r2 = x[0] * x[0] + 4.4 * x[0] - x[1] - 2.4;
    return -0.5 * (r1 * r1 + r2 * r2);
  };
  return p;
}

Problem example2_problem(Example2Stage stage) {
  Problem p;
  p.name = stage == Example2Stage::Initial ? "example2:initial"
                                           : "example2:combined";
  p.dim = 10;

  std::vector<Marginal> marginals;
  for (int i = 0; i < 6; ++i)
    marginals.push_back(Marginal::gumbel_from_moments(6.5e4, 6.5e3));
  marginals.push_back(Marginal::lognormal_from_moments(2.1e11, 2.1e10));  // E1
  marginals.push_back(Marginal::lognormal_from_moments(2e-3, 2e-4));     // A1
  marginals.push_back(Marginal::lognormal_from_moments(2.1e11, 2.1e10));  // E2
  marginals.push_back(Marginal::lognormal_from_moments(1e-3, 1e-4));     // A2
  p.transform = Transform(std::move(marginals));

  auto model = std::make_shared<TrussModel>(make_23bar_truss());
  const Transform transform = p.transform;

  p.limit_state = [model, transform](const Eigen::VectorXd& u) {
    const Eigen::VectorXd x = transform.to_physical(u);
    // Group 0 diagonals carry (E1, A1), group 1 horizontals (E2, A2).
    const std::vector<ElementProps> props = {{x[6], x[7]}, {x[8], x[9]}};
    const double d = truss_displacement(*model, x.head(6), props);
    return 0.14 - std::abs(d);
  };

  const bool combined = stage == Example2Stage::Combined;
  p.log_likelihood = [transform, combined](const Eigen::VectorXd& u) {
    const Eigen::VectorXd x = transform.to_physical(u);
    double ll = -0.5 * (square(x[7] - 1.85e-3) + square(x[9] - 0.9e-3)) /
                square(1e-4);
    if (combined)
      ll += -0.5 * (square(x[0] - 8.5e4) + square(x[5] - 7.5e4)) /
            square(0.5e4);
    return ll;
  };
  return p;
}

Problem example3_problem(const BoundaryConstants& bc) {
  Problem p;
  p.name = "example3";
  p.dim = 5;

  std::vector<Marginal> marginals;
  marginals.push_back(Marginal::lognormal_from_mode(1.2, 1.0));  // lambda_h ratio
  marginals.push_back(Marginal::uniform(0.05, 0.15));            // phi
  marginals.push_back(Marginal::uniform(0.5, 0.8));              // s1
  marginals.push_back(Marginal::lognormal_from_mode(1.0, 1.0));  // d1 ratio
  marginals.push_back(Marginal::lognormal_from_mode(0.9, 1.0));  // d2 ratio
  p.transform = Transform(std::move(marginals));
  const Transform transform = p.transform;

  constexpr double kTime = 3e8;  // s
  auto params_of = [transform](const Eigen::VectorXd& u) {
    const Eigen::VectorXd x = transform.to_physical(u);
    CorrosionParams cp;
    cp.lambda_h = x[0] * kLambdaHNominal;
    cp.phi = x[1];
    cp.s1 = x[2];
    cp.d1 = x[3] * kD1Nominal;
    cp.d2 = x[4] * kD2Nominal;
    return cp;
  };

  p.limit_state = [params_of, bc](const Eigen::VectorXd& u) {
    return 0.3 - chloride_profile(params_of(u), bc, 0.05, kTime);
  };

  // Two concentration observations (0.75 at 0.01 m, 0.35 at 0.03 m) with
  // ratio errors of std 1/15 and a carbonation depth observation (0.015 m)
  // with ratio error of std 1/10.
  p.log_likelihood = [params_of, bc](const Eigen::VectorXd& u) {
    const CorrosionParams cp = params_of(u);
    const double c1 = chloride_profile(cp, bc, 0.01, kTime);
    const double c2 = chloride_profile(cp, bc, 0.03, kTime);
    const double depth = carbonation_rate(cp) * std::sqrt(kTime);
    const double r_conc =
        square(c1 / 0.75 - 1.0) + square(c2 / 0.35 - 1.0);
    const double r_depth = square(depth / 0.015 - 1.0);
    return -r_conc / (2.0 * square(1.0 / 15.0)) -
           r_depth / (2.0 * square(1.0 / 10.0));
  };
  return p;
}

Problem example3_problem() {
  return example3_problem(reference_boundary_constants);
}

Problem by_name(const std::string& name) {
  if (name == "example1") return example1_problem();
  if (name == "example2:initial")
    return example2_problem(Example2Stage::Initial);
  if (name == "example2:combined")
    return example2_problem(Example2Stage::Combined);
  if (name == "example3") return example3_problem();
  throw DomainError("unknown problem: " + name);
}

std::vector<std::string> registry_names() {
  return {"example1", "example2:initial", "example2:combined", "example3"};
}

}  // namespace rusais::problems
