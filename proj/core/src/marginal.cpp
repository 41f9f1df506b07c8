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

#include "rusais/marginal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Marginal Marginal::standard_normal() {
  return Marginal(Kind::StandardNormal, 0.0, 1.0);
}

Marginal Marginal::normal(double mean, double stddev) {
  require(std::isfinite(mean) && stddev > 0.0, "normal: stddev must be > 0");
  return Marginal(Kind::Normal, mean, stddev);
}

Marginal Marginal::lognormal(double mu_log, double sigma_log) {
  require(std::isfinite(mu_log) && sigma_log > 0.0,
          "lognormal: sigma_log must be > 0");
  return Marginal(Kind::Lognormal, mu_log, sigma_log);
}

Marginal Marginal::lognormal_from_moments(double mean, double stddev) {
  require(mean > 0.0 && stddev > 0.0,
          "lognormal_from_moments: mean and stddev must be > 0");
  const double s2 = std::log1p((stddev / mean) * (stddev / mean));
  return lognormal(std::log(mean) - 0.5 * s2, std::sqrt(s2));
}

Marginal Marginal::lognormal_from_mode(double mode, double stddev) {
  require(mode > 0.0 && stddev > 0.0,
          "lognormal_from_mode: mode and stddev must be > 0");
  // With mu = log(mode) + s^2 the standard deviation
  //   mode * exp(1.5 s^2) * sqrt(exp(s^2) - 1)
  // is strictly increasing in s; bisect it against the target.
  auto stddev_of = [mode](double s) {
    return mode * std::exp(1.5 * s * s) * std::sqrt(std::expm1(s * s));
  };
  double lo = 1e-6, hi = 5.0;
  require(stddev_of(lo) <= stddev && stddev_of(hi) >= stddev,
          "lognormal_from_mode: stddev out of solvable range");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (stddev_of(mid) < stddev ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  return lognormal(std::log(mode) + s * s, s);
}

Marginal Marginal::gumbel(double location, double scale) {
  require(std::isfinite(location) && scale > 0.0, "gumbel: scale must be > 0");
  return Marginal(Kind::Gumbel, location, scale);
}

Marginal Marginal::gumbel_from_moments(double mean, double stddev) {
  require(std::isfinite(mean) && stddev > 0.0,
          "gumbel_from_moments: stddev must be > 0");
  const double scale = stddev * std::sqrt(6.0) / kPi;
  return gumbel(mean - kEulerMascheroni * scale, scale);
}

Marginal Marginal::uniform(double lower, double upper) {
  require(lower < upper, "uniform: lower must be < upper");
  return Marginal(Kind::Uniform, lower, upper);
}

double Marginal::pdf(double x) const { return std::exp(log_pdf(x)); }

double Marginal::log_pdf(double x) const {
  if (std::isnan(x)) throw DomainError("Marginal::log_pdf: NaN input");
  switch (kind_) {
    case Kind::StandardNormal:
      return std_normal_log_pdf(x);
    case Kind::Normal: {
      const double z = (x - a_) / b_;
      return std_normal_log_pdf(z) - std::log(b_);
    }
    case Kind::Lognormal: {
      if (x <= 0.0) return -kInf;
      const double z = (std::log(x) - a_) / b_;
      return std_normal_log_pdf(z) - std::log(b_ * x);
    }
    case Kind::Gumbel: {
      const double z = (x - a_) / b_;
      return -std::log(b_) - z - std::exp(-z);
    }
    case Kind::Uniform:
      if (x < a_ || x > b_) return -kInf;
      return -std::log(b_ - a_);
  }
  return -kInf;
}

double Marginal::cdf(double x) const {
  if (std::isnan(x)) throw DomainError("Marginal::cdf: NaN input");
  switch (kind_) {
    case Kind::StandardNormal:
      return std_normal_cdf(x);
    case Kind::Normal:
      return std_normal_cdf((x - a_) / b_);
    case Kind::Lognormal:
      if (x <= 0.0) return 0.0;
      return std_normal_cdf((std::log(x) - a_) / b_);
    case Kind::Gumbel:
      return std::exp(-std::exp(-(x - a_) / b_));
    case Kind::Uniform:
      if (x <= a_) return 0.0;
      if (x >= b_) return 1.0;
      return (x - a_) / (b_ - a_);
  }
  return 0.0;
}

double Marginal::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("Marginal::quantile: p must lie in (0,1)");
  switch (kind_) {
    case Kind::StandardNormal:
      return std_normal_quantile(p);
    case Kind::Normal:
      return a_ + b_ * std_normal_quantile(p);
    case Kind::Lognormal:
      return std::exp(a_ + b_ * std_normal_quantile(p));
    case Kind::Gumbel:
      return a_ - b_ * std::log(-std::log(p));
    case Kind::Uniform:
      return a_ + p * (b_ - a_);
  }
  return 0.0;
}

double Marginal::from_standard_normal(double u) const {
  switch (kind_) {
    case Kind::StandardNormal:
      return u;
    case Kind::Normal:
      return a_ + b_ * u;
    case Kind::Lognormal:
      return std::exp(a_ + b_ * u);
    case Kind::Gumbel:
      // -log Phi(u) stays accurate in both tails.
      return a_ - b_ * std::log(-std_normal_log_cdf(u));
    case Kind::Uniform:
      return a_ + (b_ - a_) * std_normal_cdf(u);
  }
  return u;
}

double Marginal::to_standard_normal(double x) const {
  switch (kind_) {
    case Kind::StandardNormal:
      return x;
    case Kind::Normal:
      return (x - a_) / b_;
    case Kind::Lognormal:
      if (x <= 0.0) return -kInf;
      return (std::log(x) - a_) / b_;
    case Kind::Gumbel: {
      const double t = std::exp(-(x - a_) / b_);
      const double p = std::exp(-t);
      const double q = -std::expm1(-t);
      if (p == 0.0) return -kInf;
      if (q == 0.0) return kInf;
      return std_normal_quantile_pq(p, q);
    }
    case Kind::Uniform: {
      const double p = (x - a_) / (b_ - a_);
      const double q = (b_ - x) / (b_ - a_);
      if (p <= 0.0) return -kInf;
      if (q <= 0.0) return kInf;
      return std_normal_quantile_pq(p, q);
    }
  }
  return x;
}

std::string Marginal::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::StandardNormal:
      os << "std_normal";
      break;
    case Kind::Normal:
      os << "normal(" << a_ << "," << b_ << ")";
      break;
    case Kind::Lognormal:
      os << "lognormal(" << a_ << "," << b_ << ")";
      break;
    case Kind::Gumbel:
      os << "gumbel(" << a_ << "," << b_ << ")";
      break;
    case Kind::Uniform:
      os << "uniform(" << a_ << "," << b_ << ")";
      break;
  }
  return os.str();
}

}  // namespace rusais
