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

#include "rusais/corrosion.hpp"

#include <cmath>

#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {
namespace {

void check_params(const CorrosionParams& p) {
  if (!(p.d1 > 0.0) || !(p.d2 > 0.0))
    throw DomainError("CorrosionParams: diffusivities must be > 0");
  if (!(p.s1 > 0.0 && p.s1 < 1.0))
    throw DomainError("CorrosionParams: s1 must lie in (0,1)");
  if (!(p.phi > 0.0 && p.phi < 1.0))
    throw DomainError("CorrosionParams: phi must lie in (0,1)");
  if (!(p.lambda_h > 0.0))
    throw DomainError("CorrosionParams: lambda_h must be > 0");
}

}  // namespace

BoundaryTriple reference_boundary_constants(double k1, double k2) {
  // Unit surface concentration:        a1 + a2 = 1
  // Concentration continuity at front: a1 erfc(k2/k1) + a2 = a3 erfc(k2)
  // Flux continuity at front:          a1 k1 exp(-(k2/k1)^2) = a3 exp(-k2^2)
  // exp(k2^2) erfc(k2) is evaluated in scaled form so large fronts cannot
  // overflow the denominator.
  const double r = k2 / k1;
  const double scaled_tail = std::exp(k2 * k2 + log_erfc(k2) - r * r);
  const double denom = 1.0 + k1 * scaled_tail - std::erfc(r);

  BoundaryTriple t;
  t.a1 = 1.0 / denom;
  t.a2 = 1.0 - t.a1;
  t.a3 = t.a1 * k1 * std::exp(k2 * k2 - r * r);
  return t;
}

double carbonation_rate(const CorrosionParams& p) {
  check_params(p);
  return std::sqrt(2.0 * kCo2Diffusivity * p.lambda_h *
                   std::pow(p.phi, kPorosityExponent) *
                   std::pow(1.0 - p.s1, kSaturationExponent));
}

double chloride_profile(const CorrosionParams& p, const BoundaryConstants& bc,
                        double x, double t) {
  check_params(p);
  if (!(x >= 0.0) || !(t > 0.0))
    throw DomainError("chloride_profile: x >= 0 and t > 0 required");

  const double k = carbonation_rate(p);
  const double front = k * std::sqrt(t);
  const double k1 = std::sqrt(p.d1 / p.d2);
  const double k2 = k / (2.0 * std::sqrt(p.d2));
  const BoundaryTriple c = bc(k1, k2);

  // Gate on the continuity invariant before trusting a plugged bc.
  const double front_zone1 = c.a1 * std::erfc(k2 / k1) + c.a2;
  if (std::isfinite(c.a3)) {
    const double front_zone2 = std::exp(std::log(c.a3) + log_erfc(k2));
    if (std::abs(front_zone1 - front_zone2) >
        1e-6 * std::max(std::abs(front_zone1), std::abs(front_zone2)))
      throw NumericalError(
          "chloride_profile: boundary constants break continuity at the "
          "front");
  }

  if (x <= front) return c.a1 * std::erfc(x / (2.0 * std::sqrt(p.d1 * t))) + c.a2;

  const double xi = x / (2.0 * std::sqrt(p.d2 * t));
  if (std::isfinite(c.a3))
    return std::exp(std::log(c.a3) + log_erfc(xi));
  // a3 overflowed; fall back on continuity: scale the front value by the
  // tail ratio erfc(xi)/erfc(k2).
  return front_zone1 * std::exp(log_erfc(xi) - log_erfc(k2));
}

}  // namespace rusais
