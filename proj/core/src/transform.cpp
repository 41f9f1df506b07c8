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

#include "rusais/transform.hpp"

#include "rusais/errors.hpp"

namespace rusais {

Transform Transform::all_standard_normal(int dim) {
  std::vector<Marginal> m;
  m.reserve(dim);
  for (int i = 0; i < dim; ++i) m.push_back(Marginal::standard_normal());
  return Transform(std::move(m));
}

Eigen::VectorXd Transform::to_physical(const Eigen::VectorXd& u) const {
  if (u.size() != dim())
    throw DomainError("Transform::to_physical: dimension mismatch");
  Eigen::VectorXd x(u.size());
  for (int i = 0; i < u.size(); ++i)
    x[i] = marginals_[i].from_standard_normal(u[i]);
  return x;
}

Eigen::VectorXd Transform::to_standard(const Eigen::VectorXd& x) const {
  if (x.size() != dim())
    throw DomainError("Transform::to_standard: dimension mismatch");
  Eigen::VectorXd u(x.size());
  for (int i = 0; i < x.size(); ++i)
    u[i] = marginals_[i].to_standard_normal(x[i]);
  return u;
}

Eigen::MatrixXd sample_standard(int n, int dim, RngStream& rng) {
  if (n < 1 || dim < 1)
    throw DomainError("sample_standard: n and dim must be >= 1");
  Eigen::MatrixXd out(n, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) out(i, j) = rng.normal();
  return out;
}

}  // namespace rusais
