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

#include "rusais/problems.hpp"
#include "rusais/serialization.hpp"
#include "rusais/updating.hpp"

using namespace rusais;

TEST_SUITE_BEGIN("serialization");

TEST_CASE("mixture record round-trips exactly") {
  RngStream rng(3);
  Eigen::VectorXd m1(2), m2(2);
  m1 << 0.123456789012345, -4.5e-7;
  m2 << 1.0 / 3.0, 2.0 / 7.0;
  Eigen::MatrixXd c1(2, 2), c2(2, 2);
  c1 << 0.9, 0.1, 0.1, 0.8;
  c2 << 1.3, -0.2, -0.2, 0.6;
  const GaussianMixture gm({0.25, 0.75}, {m1, m2}, {c1, c2});
  const GaussianMixture back = mixture_from_json(mixture_to_json(gm, 42));
  REQUIRE(back.components() == 2);
  for (int j = 0; j < 2; ++j) {
    CHECK(back.weight(j) == gm.weight(j));
    CHECK(back.mean(j) == gm.mean(j));
    CHECK(back.covariance(j) == gm.covariance(j));
  }
  Eigen::VectorXd x(2);
  x << 0.7, -0.3;
  CHECK(back.log_pdf(x) == gm.log_pdf(x));
}

TEST_CASE("report record round-trips field-identically") {
  const Problem p = problems::example1_problem();
  UpdateConfig cfg;
  cfg.n_g = 300;
  cfg.k = 6;
  cfg.n1 = 600;
  cfg.n2 = 600;
  cfg.seed = 9;
  RngStream rng(9);
  const UpdateReport r = update_reliability(p, cfg, std::nullopt, rng).report;
  const UpdateReport back = report_from_json(report_to_json(r));
  CHECK(back.method == r.method);
  CHECK(back.problem == r.problem);
  CHECK(back.i1_hat == r.i1_hat);
  CHECK(back.i2_hat == r.i2_hat);
  CHECK(back.pf_post_hat == r.pf_post_hat);
  CHECK(back.delta1 == r.delta1);
  CHECK(back.delta2 == r.delta2);
  CHECK(back.m1 == r.m1);
  CHECK(back.m2 == r.m2);
  CHECK(back.n_ce1 == r.n_ce1);
  CHECK(back.n_ce2 == r.n_ce2);
  CHECK(back.likelihood_calls == r.likelihood_calls);
  CHECK(back.lsf_calls == r.lsf_calls);
  CHECK(back.seed == r.seed);
  CHECK(back.warm_started == r.warm_started);
  CHECK(back.status == r.status);
  CHECK(back.config.n_g == r.config.n_g);
  CHECK(back.config.delta_w_thr == r.config.delta_w_thr);
  // Serializing again gives the identical text.
  CHECK(report_to_json(back) == report_to_json(r));
}

TEST_CASE("run record carries warm-start mixtures") {
  const Problem p = problems::example1_problem();
  UpdateConfig cfg;
  cfg.n_g = 300;
  cfg.k = 6;
  cfg.n1 = 600;
  cfg.n2 = 600;
  RngStream rng(21);
  const UpdateRun run = update_reliability(p, cfg, std::nullopt, rng);
  const WarmStart ws = warm_start_from_json(run_to_json(run));
  const GaussianMixture& expect = run.trace_numerator.last_mixture();
  REQUIRE(ws.numerator.components() == expect.components());
  for (int j = 0; j < expect.components(); ++j)
    CHECK(ws.numerator.mean(j) == expect.mean(j));
  CHECK(ws.denominator.components() ==
        run.trace_denominator.last_mixture().components());

  CHECK_THROWS(warm_start_from_json("{}"));
}

TEST_SUITE_END();
