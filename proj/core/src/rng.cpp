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

#include "rusais/rng.hpp"

namespace rusais {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed), engine_(seed), normal_(0.0, 1.0), uniform_(0.0, 1.0) {}

double RngStream::normal() { return normal_(engine_); }

double RngStream::uniform() {
  double u;
  do {
    u = uniform_(engine_);
  } while (u <= 0.0 || u >= 1.0);
  return u;
}

std::size_t RngStream::index(std::size_t bound) {
  std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
  return dist(engine_);
}

RngStream RngStream::spawn(std::uint64_t salt) const {
  return RngStream(split_seed(seed_, salt));
}

}  // namespace rusais
