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

#include "rusais/problem.hpp"

#include "rusais/errors.hpp"
#include "rusais/stdnormal.hpp"

namespace rusais {

double Problem::log_prior(const Eigen::VectorXd& u) const {
  return -0.5 * (dim * kLogTwoPi + u.squaredNorm());
}

Batch Batch::from_mixture(const GaussianMixture& gm, int n,
                          const Problem& problem, RngStream& rng) {
  return from_samples(gm.sample(n, rng), gm, problem);
}

Batch Batch::from_samples(Eigen::MatrixXd samples,
                          const GaussianMixture& generator,
                          const Problem& problem) {
  if (samples.cols() != problem.dim)
    throw DomainError("Batch: sample dimension mismatch");
  Batch b;
  b.u = std::move(samples);
  b.log_pg_prev = generator.log_pdf_rows(b.u);
  b.log_prior.resize(b.u.rows());
  for (int i = 0; i < b.u.rows(); ++i)
    b.log_prior[i] = problem.log_prior(b.u.row(i).transpose());
  return b;
}

void Batch::ensure_g(const Problem& problem, EvalCounts& counts) {
  if (has_g) return;
  g.resize(size());
  for (int i = 0; i < size(); ++i)
    g[i] = problem.limit_state(u.row(i).transpose());
  counts.lsf += size();
  has_g = true;
}

void Batch::ensure_log_like(const Problem& problem, EvalCounts& counts) {
  if (has_log_like) return;
  log_like.resize(size());
  for (int i = 0; i < size(); ++i)
    log_like[i] = problem.log_likelihood(u.row(i).transpose());
  counts.likelihood += size();
  has_log_like = true;
}

Batch Batch::concat(const Batch& a, const Batch& b) {
  if (a.u.cols() != b.u.cols()) throw DomainError("Batch::concat: dim mismatch");
  if (a.has_g != b.has_g || a.has_log_like != b.has_log_like)
    throw DomainError("Batch::concat: evaluation states differ");
  Batch out;
  const int na = a.size(), nb = b.size();
  out.u.resize(na + nb, a.u.cols());
  out.u << a.u, b.u;
  out.log_prior.resize(na + nb);
  out.log_prior << a.log_prior, b.log_prior;
  out.log_pg_prev.resize(na + nb);
  out.log_pg_prev << a.log_pg_prev, b.log_pg_prev;
  out.has_g = a.has_g;
  if (out.has_g) {
    out.g.resize(na + nb);
    out.g << a.g, b.g;
  }
  out.has_log_like = a.has_log_like;
  if (out.has_log_like) {
    out.log_like.resize(na + nb);
    out.log_like << a.log_like, b.log_like;
  }
  return out;
}

}  // namespace rusais
