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

#ifndef RUSAIS_SERIALIZATION_HPP
#define RUSAIS_SERIALIZATION_HPP

#include <cstdint>
#include <string>

#include "rusais/mixture.hpp"
#include "rusais/updating.hpp"

namespace rusais {

// Structured-text records. Doubles round-trip exactly.

std::string mixture_to_json(const GaussianMixture& gm, std::uint64_t seed = 0);
GaussianMixture mixture_from_json(const std::string& text);

std::string report_to_json(const UpdateReport& report);
UpdateReport report_from_json(const std::string& text);

// Full run record: the report, one record per tempering step (kappa,
// lambda, failure fraction, mixture summary) and the final tempering
// mixtures a later stage can warm-start from.
std::string run_to_json(const UpdateRun& run);
WarmStart warm_start_from_json(const std::string& text);

}  // namespace rusais

#endif  // RUSAIS_SERIALIZATION_HPP
