// Copyright 2026 The metric-forge Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mforge {

using Rng = std::mt19937_64;

/// Derives an independent seed for a named consumer of randomness.
///
/// All randomness in a run flows from one 64-bit seed; each logical consumer
/// (Bourgain set sampling, JL matrix, HST trial t, ...) gets its own stream
/// identified by `stream` and an optional index, so adding a new consumer
/// never perturbs the numbers drawn by existing ones.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream,
                          std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed, std::string_view stream,
                    std::uint64_t index = 0) {
  return Rng(derive_seed(seed, stream, index));
}

/// Uniform random k-subset of {0..n-1} by partial Fisher-Yates, sorted.
std::vector<std::size_t> sample_subset(std::size_t n, std::size_t k, Rng& rng);

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);

}  // namespace mforge
