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

#ifndef RUSAIS_RNG_HPP
#define RUSAIS_RNG_HPP

#include <cstdint>
#include <random>

namespace rusais {

// Deterministic seed splitter (splitmix64 finalizer). Used to derive
// statistically independent sub-stream seeds from a root seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t salt);

// A seeded random stream. One stream is owned by one task at a time;
// parallel work uses spawn() to derive independent child streams, so runs
// are reproducible regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  double normal();             // N(0,1)
  double uniform();            // U(0,1), never exactly 0 or 1
  std::size_t index(std::size_t bound);  // uniform integer in [0, bound)

  RngStream spawn(std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

}  // namespace rusais

#endif  // RUSAIS_RNG_HPP
