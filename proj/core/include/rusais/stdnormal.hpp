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

#ifndef RUSAIS_STDNORMAL_HPP
#define RUSAIS_STDNORMAL_HPP

namespace rusais {

inline constexpr double kLogTwoPi = 1.8378770664093454836;
inline constexpr double kEulerMascheroni = 0.57721566490153286061;

// Standard normal density phi(x). Throws DomainError on non-finite input.
double std_normal_pdf(double x);

// log phi(x); accepts +/-inf (returns -inf).
double std_normal_log_pdf(double x);

// Standard normal CDF Phi(x), erfc-based, absolute error below 1e-12.
// Accepts +/-inf; throws DomainError on NaN.
double std_normal_cdf(double x);

// log Phi(x), accurate for arbitrarily negative x where Phi underflows.
// Uses the asymptotic tail expansion below x = -20.
double std_normal_log_cdf(double x);

// Inverse CDF. Requires 0 < p < 1; rational initial guess refined by
// Halley steps against std_normal_cdf.
double std_normal_quantile(double p);

// Inverse CDF given both p and q = 1 - p; picks the better-conditioned
// tail so callers that know q exactly keep precision near p = 1.
double std_normal_quantile_pq(double p, double q);

// log erfc(z), stable for large positive z.
double log_erfc(double z);

}  // namespace rusais

#endif  // RUSAIS_STDNORMAL_HPP
