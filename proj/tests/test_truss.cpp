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

#include <doctest.h>

#include <cmath>

#include "rusais/errors.hpp"
#include "rusais/truss.hpp"

using namespace rusais;

namespace {

// Single-bay pin-jointed triangle: legs (group 0) and a bottom tie
// (group 1), point load P down at the apex.
TrussModel triangle() {
  TrussModel m;
  m.nodes.resize(3, 2);
  m.nodes << 0.0, 0.0, 4.0, 0.0, 2.0, 1.5;
  m.elements.resize(3, 2);
  m.elements << 0, 2, 1, 2, 0, 1;
  m.element_group = {0, 0, 1};
  m.fixed_dofs = {0, 1, 3};
  m.load_nodes = {2};
  m.probe_node = 2;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("truss");

TEST_CASE("triangle matches the analytic member-force solution") {
  const TrussModel m = triangle();
  const double e_mod = 2.1e11, area = 2e-3, p_load = 1e5;
  const std::vector<ElementProps> props = {{e_mod, area}, {e_mod, area}};
  Eigen::VectorXd load(1);
  load << p_load;
  const double d = truss_displacement(m, load, props);

  // Member forces by statics: legs P/(2 sin t), tie P/(2 tan t); apex drop
  // by virtual work sum F^2 L / (E A P).
  const double leg_len = 2.5, sin_t = 1.5 / 2.5, tan_t = 1.5 / 2.0;
  const double f_leg = p_load / (2.0 * sin_t);
  const double f_tie = p_load / (2.0 * tan_t);
  const double drop =
      (2.0 * f_leg * f_leg * leg_len + f_tie * f_tie * 4.0) /
      (e_mod * area * p_load);
  CHECK(d == doctest::Approx(-drop).epsilon(1e-10));
}

TEST_CASE("zero loads give zero displacement") {
  const TrussModel m = make_23bar_truss();
  const std::vector<ElementProps> props = {{2.1e11, 2e-3}, {2.1e11, 1e-3}};
  CHECK(truss_displacement(m, Eigen::VectorXd::Zero(6), props) == 0.0);
}

TEST_CASE("superposition: doubling all loads doubles the displacement") {
  const TrussModel m = make_23bar_truss();
  const std::vector<ElementProps> props = {{2.1e11, 2e-3}, {2.1e11, 1e-3}};
  Eigen::VectorXd load(6);
  load << 6.5e4, 7.0e4, 6.0e4, 6.6e4, 6.4e4, 6.5e4;
  const double d1 = truss_displacement(m, load, props);
  const double d2 = truss_displacement(m, 2.0 * load, props);
  CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-12));
}

TEST_CASE("stiffness scaling: halving E and A quadruples the displacement") {
  const TrussModel m = make_23bar_truss();
  const std::vector<ElementProps> props = {{2.1e11, 2e-3}, {2.1e11, 1e-3}};
  const std::vector<ElementProps> half = {{1.05e11, 1e-3}, {1.05e11, 0.5e-3}};
  const Eigen::VectorXd load = Eigen::VectorXd::Constant(6, 6.5e4);
  const double d1 = truss_displacement(m, load, props);
  const double d4 = truss_displacement(m, load, half);
  CHECK(d4 == doctest::Approx(4.0 * d1).epsilon(1e-12));
}

TEST_CASE("23-bar layout: counts, symmetry, downward deflection") {
  const TrussModel m = make_23bar_truss();
  CHECK(m.nodes.rows() == 13);
  CHECK(m.elements.rows() == 23);
  int horizontal = 0, diagonal = 0;
  for (int e = 0; e < 23; ++e) {
    const double dy =
        m.nodes(m.elements(e, 1), 1) - m.nodes(m.elements(e, 0), 1);
    if (dy == 0.0) {
      ++horizontal;
      CHECK(m.element_group[e] == 1);
    } else {
      ++diagonal;
      CHECK(m.element_group[e] == 0);
    }
  }
  CHECK(horizontal == 11);
  CHECK(diagonal == 12);

  const std::vector<ElementProps> props = {{2.1e11, 2e-3}, {2.1e11, 1e-3}};
  const Eigen::VectorXd load = Eigen::VectorXd::Constant(6, 6.5e4);
  const double d = truss_displacement(m, load, props);
  CHECK(d < 0.0);  // loads push the midspan down
  CHECK(std::abs(d) < 0.5);

  // Mirror the load pattern: symmetric structure, same midspan deflection.
  Eigen::VectorXd skew(6), mirrored(6);
  skew << 9e4, 6e4, 5e4, 7e4, 6.5e4, 8e4;
  for (int i = 0; i < 6; ++i) mirrored[i] = skew[5 - i];
  CHECK(truss_displacement(m, skew, props) ==
        doctest::Approx(truss_displacement(m, mirrored, props)).epsilon(1e-12));
}

TEST_CASE("invalid inputs are rejected") {
  const TrussModel m = make_23bar_truss();
  const std::vector<ElementProps> props = {{2.1e11, 2e-3}, {2.1e11, 1e-3}};
  CHECK_THROWS_AS(truss_displacement(m, Eigen::VectorXd::Zero(3), props),
                  DomainError);
  const std::vector<ElementProps> bad = {{2.1e11, -1.0}, {2.1e11, 1e-3}};
  CHECK_THROWS_AS(
      truss_displacement(m, Eigen::VectorXd::Zero(6), bad), DomainError);
}

TEST_SUITE_END();
