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

#ifndef RUSAIS_PROBLEMS_HPP
#define RUSAIS_PROBLEMS_HPP

#include <string>
#include <vector>

#include "rusais/corrosion.hpp"
#include "rusais/problem.hpp"

namespace rusais::problems {

// 2-D case with a parabolic limit state and a bimodal posterior from two
// response observations. Standard normal priors.
Problem example1_problem();

enum class Example2Stage { Initial, Combined };

// 10-D truss serviceability case: g = 0.14 - |midspan deflection|.
// Variables [P1..P6, E1, A1, E2, A2]; the Initial stage carries the two
// section-area measurements, the Combined stage multiplies in the two
// later load measurements.
Problem example2_problem(Example2Stage stage);

// 5-D concrete corrosion durability case on the two-zone chloride model:
// g = 0.3 - c(0.05 m, 3e8 s), three observations (two concentrations, one
// carbonation depth). The boundary-constant closed form is pluggable.
Problem example3_problem(const BoundaryConstants& bc);
Problem example3_problem();  // with reference_boundary_constants

// Registry used by the command line tool: "example1", "example2:initial",
// "example2:combined", "example3". Throws DomainError for unknown names.
Problem by_name(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace rusais::problems

#endif  // RUSAIS_PROBLEMS_HPP
