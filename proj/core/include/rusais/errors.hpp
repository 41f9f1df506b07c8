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

#ifndef RUSAIS_ERRORS_HPP
#define RUSAIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rusais {

// Input violates a documented precondition (bad parameter, shape mismatch).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is structurally valid but carries no usable information
// (all weights zero, fewer distinct points than clusters, ...).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical operation failed beyond repair (singular covariance after
// regularization, non-convergent quadrature refinement).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root search could not bracket its target; the message carries the
// probed values for diagnosis.
class SearchFailureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An importance-sampling estimate came out exactly zero, so its COV is
// undefined.
class ZeroEstimateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instrumented evaluation counts disagree with the closed-form cost
// identity; indicates a pipeline bug, never a user error.
class AccountingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rusais

#endif  // RUSAIS_ERRORS_HPP
