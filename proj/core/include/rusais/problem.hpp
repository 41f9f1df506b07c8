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

#ifndef RUSAIS_PROBLEM_HPP
#define RUSAIS_PROBLEM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>

#include "rusais/mixture.hpp"
#include "rusais/transform.hpp"

namespace rusais {

// A reliability-updating instance. Both functions take points in
// independent standard-normal space; problems carrying physical marginals
// apply their Transform internally. log_likelihood must be finite or -inf,
// never +inf; the likelihood itself is an unnormalized kernel in (0, 1].
struct Problem {
  std::string name;
  int dim = 0;
  Transform transform;
  std::function<double(const Eigen::VectorXd&)> limit_state;
  std::function<double(const Eigen::VectorXd&)> log_likelihood;

  // Standard-normal prior log density; sums log phi over coordinates.
  double log_prior(const Eigen::VectorXd& u) const;
};

// Live evaluation counters, incremented on every underlying model call.
// The closed-form cost identity is asserted against these.
struct EvalCounts {
  long long likelihood = 0;
  long long lsf = 0;
};

// A sample batch with memoized model evaluations. Every sample's limit
// state and likelihood are evaluated at most once over the batch lifetime,
// which is what makes the sample-count accounting exact.
struct Batch {
  Eigen::MatrixXd u;            // n x dim
  Eigen::VectorXd log_prior;    // filled at creation
  Eigen::VectorXd log_pg_prev;  // log density of the generating mixture
  Eigen::VectorXd g;            // valid iff has_g
  Eigen::VectorXd log_like;     // valid iff has_log_like
  bool has_g = false;
  bool has_log_like = false;

  int size() const { return static_cast<int>(u.rows()); }

  static Batch from_mixture(const GaussianMixture& gm, int n,
                            const Problem& problem, RngStream& rng);
  static Batch from_samples(Eigen::MatrixXd samples,
                            const GaussianMixture& generator,
                            const Problem& problem);

  void ensure_g(const Problem& problem, EvalCounts& counts);
  void ensure_log_like(const Problem& problem, EvalCounts& counts);

  // Concatenate two fully-created batches drawn from the same mixture.
  static Batch concat(const Batch& a, const Batch& b);
};

}  // namespace rusais

#endif  // RUSAIS_PROBLEM_HPP
