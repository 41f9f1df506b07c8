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

#include "rusais/truss.hpp"

#include <algorithm>
#include <cmath>

#include "rusais/errors.hpp"

namespace rusais {

TrussModel make_23bar_truss() {
  TrussModel m;
  // Bottom chord nodes 0..6 every 4 m, top chord nodes 7..12 offset by
  // half a bay at 2 m height.
  m.nodes.resize(13, 2);
  for (int i = 0; i <= 6; ++i) m.nodes.row(i) << 4.0 * i, 0.0;
  for (int i = 0; i <= 5; ++i) m.nodes.row(7 + i) << 2.0 + 4.0 * i, 2.0;

  m.elements.resize(23, 2);
  m.element_group.assign(23, 0);
  int e = 0;
  // Horizontal members (group 1): 6 bottom + 5 top.
  for (int i = 0; i < 6; ++i, ++e) {
    m.elements.row(e) << i, i + 1;
    m.element_group[e] = 1;
  }
  for (int i = 0; i < 5; ++i, ++e) {
    m.elements.row(e) << 7 + i, 8 + i;
    m.element_group[e] = 1;
  }
  // Diagonals (group 0): zig-zag between the chords.
  for (int i = 0; i < 6; ++i) {
    m.elements.row(e++) << i, 7 + i;
    m.elements.row(e++) << 7 + i, i + 1;
  }

  m.fixed_dofs = {0, 1, 13};  // pin at node 0, vertical roller at node 6
  m.load_nodes = {7, 8, 9, 10, 11, 12};
  m.probe_node = 3;  // (12, 0)
  return m;
}

double truss_displacement(const TrussModel& model,
                          const Eigen::VectorXd& loads,
                          const std::vector<ElementProps>& group_props) {
  const int n_nodes = static_cast<int>(model.nodes.rows());
  const int n_dof = 2 * n_nodes;
  if (loads.size() != static_cast<int>(model.load_nodes.size()))
    throw DomainError("truss_displacement: load count mismatch");
  for (const auto& p : group_props)
    if (!(p.elastic_modulus > 0.0) || !(p.area > 0.0))
      throw DomainError("truss_displacement: E and A must be > 0");

  Eigen::MatrixXd k_global = Eigen::MatrixXd::Zero(n_dof, n_dof);
  for (int e = 0; e < model.elements.rows(); ++e) {
    const int a = model.elements(e, 0);
    const int b = model.elements(e, 1);
    const double dx = model.nodes(b, 0) - model.nodes(a, 0);
    const double dy = model.nodes(b, 1) - model.nodes(a, 1);
    const double len = std::hypot(dx, dy);
    const ElementProps& p = group_props.at(model.element_group[e]);
    const double k = p.elastic_modulus * p.area / len;
    const double c = dx / len, s = dy / len;

    const double kk[2][2] = {{c * c, c * s}, {c * s, s * s}};
    const int dof[4] = {2 * a, 2 * a + 1, 2 * b, 2 * b + 1};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const double v = k * kk[i][j];
        k_global(dof[i], dof[j]) += v;
        k_global(dof[i + 2], dof[j + 2]) += v;
        k_global(dof[i], dof[j + 2]) -= v;
        k_global(dof[i + 2], dof[j]) -= v;
      }
    }
  }

  Eigen::VectorXd force = Eigen::VectorXd::Zero(n_dof);
  for (std::size_t i = 0; i < model.load_nodes.size(); ++i)
    force[2 * model.load_nodes[i] + 1] = -loads[static_cast<int>(i)];

  // Condense out the supported dofs.
  std::vector<int> free_dofs;
  free_dofs.reserve(n_dof);
  for (int d = 0; d < n_dof; ++d)
    if (std::find(model.fixed_dofs.begin(), model.fixed_dofs.end(), d) ==
        model.fixed_dofs.end())
      free_dofs.push_back(d);

  const int nf = static_cast<int>(free_dofs.size());
  Eigen::MatrixXd k_ff(nf, nf);
  Eigen::VectorXd f_f(nf);
  for (int i = 0; i < nf; ++i) {
    f_f[i] = force[free_dofs[i]];
    for (int j = 0; j < nf; ++j)
      k_ff(i, j) = k_global(free_dofs[i], free_dofs[j]);
  }

  Eigen::LLT<Eigen::MatrixXd> llt(k_ff);
  if (llt.info() != Eigen::Success)
    throw NumericalError("truss_displacement: singular stiffness matrix");
  const Eigen::VectorXd d = llt.solve(f_f);

  const int probe_dof = 2 * model.probe_node + 1;
  for (int i = 0; i < nf; ++i)
    if (free_dofs[i] == probe_dof) return d[i];
  return 0.0;  // probe dof is constrained
}

}  // namespace rusais
