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

#include "rusais/serialization.hpp"

#include <cmath>
#include <json.hpp>

#include "rusais/errors.hpp"

namespace rusais {
namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd vector_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i];
  return v;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i)
    rows.push_back(vector_to_json(m.row(i).transpose()));
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Eigen::MatrixXd m(r, c);
  for (int i = 0; i < r; ++i)
    m.row(i) = vector_from_json(rows[i]).transpose();
  return m;
}

json mixture_json(const GaussianMixture& gm, std::uint64_t seed) {
  json j;
  j["seed"] = seed;
  j["components"] = gm.components();
  j["dim"] = gm.dim();
  json weights = json::array(), means = json::array(), covs = json::array();
  for (int k = 0; k < gm.components(); ++k) {
    weights.push_back(gm.weight(k));
    means.push_back(vector_to_json(gm.mean(k)));
    covs.push_back(matrix_to_json(gm.covariance(k)));
  }
  j["weights"] = weights;
  j["means"] = means;
  j["covariances"] = covs;
  return j;
}

GaussianMixture mixture_from(const json& j) {
  std::vector<double> weights = j.at("weights").get<std::vector<double>>();
  std::vector<Eigen::VectorXd> means;
  std::vector<Eigen::MatrixXd> covs;
  for (const auto& m : j.at("means")) means.push_back(vector_from_json(m));
  for (const auto& c : j.at("covariances")) covs.push_back(matrix_from_json(c));
  return GaussianMixture::from_regularized(std::move(weights), std::move(means),
                                           std::move(covs));
}

json config_json(const UpdateConfig& c) {
  return json{{"n_g", c.n_g},
              {"k", c.k},
              {"n1", c.n1},
              {"n2", c.n2},
              {"delta_w_thr", c.delta_w_thr},
              {"i_f_thr", c.i_f_thr},
              {"delta1_thr", c.delta1_thr},
              {"delta2_thr", c.delta2_thr},
              {"max_steps", c.max_steps},
              {"max_ce_iters", c.max_ce_iters},
              {"seed", c.seed}};
}

UpdateConfig config_from(const json& j) {
  UpdateConfig c;
  c.n_g = j.at("n_g");
  c.k = j.at("k");
  c.n1 = j.at("n1");
  c.n2 = j.at("n2");
  c.delta_w_thr = j.at("delta_w_thr");
  c.i_f_thr = j.at("i_f_thr");
  c.delta1_thr = j.at("delta1_thr");
  c.delta2_thr = j.at("delta2_thr");
  c.max_steps = j.at("max_steps");
  c.max_ce_iters = j.at("max_ce_iters");
  c.seed = j.at("seed");
  return c;
}

json report_json(const UpdateReport& r) {
  return json{{"method", r.method},
              {"problem", r.problem},
              {"i1_hat", r.i1_hat},
              {"i2_hat", r.i2_hat},
              {"pf_post_hat", r.pf_post_hat},
              {"delta1", r.delta1},
              {"delta2", r.delta2},
              {"m1", r.m1},
              {"m2", r.m2},
              {"n_ce1", r.n_ce1},
              {"n_ce2", r.n_ce2},
              {"likelihood_calls", r.likelihood_calls},
              {"lsf_calls", r.lsf_calls},
              {"seed", r.seed},
              {"warm_started", r.warm_started},
              {"status", r.status},
              {"config", config_json(r.config)}};
}

UpdateReport report_from(const json& j) {
  UpdateReport r;
  r.method = j.at("method");
  r.problem = j.at("problem");
  r.i1_hat = j.at("i1_hat");
  r.i2_hat = j.at("i2_hat");
  r.pf_post_hat = j.at("pf_post_hat");
  r.delta1 = j.at("delta1");
  r.delta2 = j.at("delta2");
  r.m1 = j.at("m1");
  r.m2 = j.at("m2");
  r.n_ce1 = j.at("n_ce1");
  r.n_ce2 = j.at("n_ce2");
  r.likelihood_calls = j.at("likelihood_calls");
  r.lsf_calls = j.at("lsf_calls");
  r.seed = j.at("seed");
  r.warm_started = j.at("warm_started");
  r.status = j.at("status");
  r.config = config_from(j.at("config"));
  return r;
}

json trace_json(const SaisTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step;
    step["kappa"] = s.density.kappa;
    step["lambda"] = s.density.lambda;
    if (std::isfinite(s.failure_fraction))
      step["failure_fraction"] = s.failure_fraction;
    step["components"] = s.mixture.components();
    step["component_means"] = json::array();
    for (int k = 0; k < s.mixture.components(); ++k)
      step["component_means"].push_back(vector_to_json(s.mixture.mean(k)));
    step["shared_cov_diag"] =
        vector_to_json(s.mixture.covariance(0).diagonal());
    steps.push_back(step);
  }
  json j;
  j["target"] =
      trace.target == Target::Numerator ? "numerator" : "denominator";
  j["m"] = trace.m;
  j["steps"] = steps;
  j["last_mixture"] = mixture_json(trace.last_mixture(), 0);
  return j;
}

}  // namespace

std::string mixture_to_json(const GaussianMixture& gm, std::uint64_t seed) {
  return mixture_json(gm, seed).dump(2);
}

GaussianMixture mixture_from_json(const std::string& text) {
  return mixture_from(json::parse(text));
}

std::string report_to_json(const UpdateReport& report) {
  return report_json(report).dump(2);
}

UpdateReport report_from_json(const std::string& text) {
  return report_from(json::parse(text));
}

std::string run_to_json(const UpdateRun& run) {
  json j;
  j["report"] = report_json(run.report);
  j["trace_numerator"] = trace_json(run.trace_numerator);
  j["trace_denominator"] = trace_json(run.trace_denominator);
  return j.dump(2);
}

WarmStart warm_start_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("trace_numerator") || !j.contains("trace_denominator"))
    throw DomainError("warm_start_from_json: not a run record with traces");
  return WarmStart{
      mixture_from(j.at("trace_numerator").at("last_mixture")),
      mixture_from(j.at("trace_denominator").at("last_mixture"))};
}

}  // namespace rusais
