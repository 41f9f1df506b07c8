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

#ifndef RUSAIS_BASELINES_HPP
#define RUSAIS_BASELINES_HPP

#include <optional>
#include <vector>

#include "rusais/problem.hpp"
#include "rusais/updating.hpp"

namespace rusais {

// Direct-sampling reference: both integrals from prior draws. With a
// shared batch the two estimates use the same samples (so L==1, g<=0
// everywhere gives the ratio exactly 1); otherwise independent batches.
UpdateReport crude_mcs_update(const Problem& problem, long long n,
                              RngStream& rng, bool shared_batch = true);

struct OracleResult {
  double i1 = 0.0;
  double i2 = 0.0;
  double rel_err_i1 = 0.0;  // grid-doubling estimate
  double rel_err_i2 = 0.0;
};

// Deterministic tensor quadrature of both integrals for dim <= 3.
// Nested Gauss-Legendre panels; the innermost axis locates the limit-state
// sign changes by scan-and-bisect so the failure indicator never crosses a
// panel. Refines by doubling the grid until successive estimates agree to
// rel_tol; throws NumericalError if they never do.
OracleResult quadrature_oracle(const Problem& problem, double bound = 8.5,
                               int grid = 64, double rel_tol = 1e-6);

struct SusConfig {
  double p0 = 0.1;
  int samples_per_level = 1000;
  double gamma_corr = 0.2;         // budget-formula correlation factor
  std::optional<double> c_mult;    // observation multiplier c; pilot when unset
  int pilot_samples = 10000;
  int max_levels = 30;

  void validate() const;
};

// Straub-reformulated subset simulation: an auxiliary standard normal U
// turns the equality observation into the domain {Phi(U) <= c L(x)}, and
// both Pr(E intersect Z) and Pr(Z) are estimated by subset simulation with
// adaptive conditional sampling. If a sampled point violates c L <= 1 the
// multiplier is rescaled by the violation ratio and the run restarts once.
UpdateReport subset_simulation_update(const Problem& problem,
                                      const SusConfig& cfg, RngStream& rng);

// Per-level sample count for a target total COV split evenly across
// levels: ceil((1+gamma)(1-p0)/(p0 delta_i^2)) with delta_i =
// delta_target/sqrt(levels).
long long sus_level_budget(double delta_target, int levels, double gamma_corr,
                           double p0);

}  // namespace rusais

#endif  // RUSAIS_BASELINES_HPP
