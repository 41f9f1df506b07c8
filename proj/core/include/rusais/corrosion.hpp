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

#ifndef RUSAIS_CORROSION_HPP
#define RUSAIS_CORROSION_HPP

#include <functional>

namespace rusais {

// Two-zone chloride ingress under carbonation: a carbonated zone with
// diffusivity d1 ahead of the moving reaction front at L_C = k sqrt(t), an
// uncarbonated zone with d2 behind it.
struct CorrosionParams {
  double lambda_h;  // carbonation rate coefficient
  double phi;       // concrete porosity
  double s1;        // pore saturation degree
  double d1;        // m^2/s, carbonated-zone chloride diffusivity
  double d2;        // m^2/s, uncarbonated-zone chloride diffusivity
};

inline constexpr double kCo2Diffusivity = 2e-5;  // m^2/s, CO2 in air
inline constexpr double kPorosityExponent = 2.74;
inline constexpr double kSaturationExponent = 4.20;
inline constexpr double kLambdaHNominal = 2e-5;
inline constexpr double kD1Nominal = 1e-11;  // m^2/s
inline constexpr double kD2Nominal = 2e-12;  // m^2/s

struct BoundaryTriple {
  double a1;
  double a2;
  double a3;
};

// Profile constants as a function of k1 = sqrt(d1/d2) and k2 = k/(2 sqrt(d2)).
// Pluggable so alternative closed forms can be substituted; any
// implementation must keep the profile continuous at the front.
using BoundaryConstants = std::function<BoundaryTriple(double k1, double k2)>;

// Reference constants from surface concentration, concentration continuity
// and flux continuity at the moving front.
BoundaryTriple reference_boundary_constants(double k1, double k2);

// Carbonation rate k = sqrt(2 D0 lambda_h phi^l1 (1-s1)^l2).
double carbonation_rate(const CorrosionParams& p);

// Normalized chloride concentration at depth x (m) and time t (s).
double chloride_profile(const CorrosionParams& p, const BoundaryConstants& bc,
                        double x, double t);

}  // namespace rusais

#endif  // RUSAIS_CORROSION_HPP
