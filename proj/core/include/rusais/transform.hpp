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

#ifndef RUSAIS_TRANSFORM_HPP
#define RUSAIS_TRANSFORM_HPP

#include <Eigen/Dense>
#include <vector>

#include "rusais/marginal.hpp"
#include "rusais/rng.hpp"

namespace rusais {

// Componentwise isoprobabilistic transform between physical space and
// independent standard-normal space. Marginals are mutually independent;
// correlated priors are out of scope.
class Transform {
 public:
  Transform() = default;
  explicit Transform(std::vector<Marginal> marginals)
      : marginals_(std::move(marginals)) {}

  static Transform all_standard_normal(int dim);

  int dim() const { return static_cast<int>(marginals_.size()); }
  const Marginal& marginal(int i) const { return marginals_.at(i); }

  Eigen::VectorXd to_physical(const Eigen::VectorXd& u) const;
  Eigen::VectorXd to_standard(const Eigen::VectorXd& x) const;

 private:
  std::vector<Marginal> marginals_;
};

// n x dim matrix of independent standard normal draws; deterministic for a
// fixed stream state.
Eigen::MatrixXd sample_standard(int n, int dim, RngStream& rng);

}  // namespace rusais

#endif  // RUSAIS_TRANSFORM_HPP
