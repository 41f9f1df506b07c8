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

#ifndef RUSAIS_MARGINAL_HPP
#define RUSAIS_MARGINAL_HPP

#include <string>

namespace rusais {

// Scalar prior marginal. All downstream density arithmetic is done in log
// space, so every kind exposes log_pdf.
class Marginal {
 public:
  enum class Kind { StandardNormal, Normal, Lognormal, Gumbel, Uniform };

  static Marginal standard_normal();
  static Marginal normal(double mean, double stddev);
  // Parameters of the underlying normal of log X.
  static Marginal lognormal(double mu_log, double sigma_log);
  // Moment matching: sigma^2 = log(1 + (std/mean)^2), mu = log(mean) - sigma^2/2.
  static Marginal lognormal_from_moments(double mean, double stddev);
  // Mode/std parameterization; solves for sigma_log by bisection.
  static Marginal lognormal_from_mode(double mode, double stddev);
  static Marginal gumbel(double location, double scale);
  // Moment matching: scale = std*sqrt(6)/pi, location = mean - gamma_E*scale.
  static Marginal gumbel_from_moments(double mean, double stddev);
  static Marginal uniform(double lower, double upper);

  double pdf(double x) const;
  double log_pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;

  // quantile(Phi(u)) and Phi^-1(cdf(x)), with analytic shortcuts where the
  // composition simplifies (Normal, Lognormal) and tail-stable evaluation
  // elsewhere.
  double from_standard_normal(double u) const;
  double to_standard_normal(double x) const;

  Kind kind() const { return kind_; }
  // Meaning depends on kind: (mean,std), (mu_log,sigma_log),
  // (location,scale) or (lower,upper).
  double param_a() const { return a_; }
  double param_b() const { return b_; }

  std::string describe() const;

 private:
  Marginal(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  double a_;
  double b_;
};

}  // namespace rusais

#endif  // RUSAIS_MARGINAL_HPP
