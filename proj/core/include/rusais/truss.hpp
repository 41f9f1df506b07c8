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

#ifndef RUSAIS_TRUSS_HPP
#define RUSAIS_TRUSS_HPP

#include <Eigen/Dense>
#include <vector>

namespace rusais {

// Planar pin-jointed truss solved by the direct stiffness method.
struct TrussModel {
  Eigen::MatrixXd nodes;     // n_nodes x 2, coordinates in m
  Eigen::MatrixXi elements;  // n_elements x 2, node indices
  std::vector<int> element_group;  // group id per element
  std::vector<int> fixed_dofs;     // global dof indices (2*node+axis)
  std::vector<int> load_nodes;     // nodes carrying the point loads
  int probe_node = 0;              // node whose vertical displacement is reported
};

struct ElementProps {
  double elastic_modulus;  // Pa
  double area;             // m^2
};

// Simply supported 23-element truss: 6 bays of 4 m, 2 m high, 11 horizontal
// chord members (group 1) and 12 diagonals (group 0), loads on the six top
// nodes, displacement probed at the middle bottom node.
TrussModel make_23bar_truss();

// Vertical displacement (signed, m) of the probe node under the given
// nodal loads (N, positive downward) and per-group section properties.
// Throws NumericalError if the constrained stiffness matrix is singular.
double truss_displacement(const TrussModel& model,
                          const Eigen::VectorXd& loads,
                          const std::vector<ElementProps>& group_props);

}  // namespace rusais

#endif  // RUSAIS_TRUSS_HPP
