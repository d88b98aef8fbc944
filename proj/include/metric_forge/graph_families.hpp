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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "metric_forge/graph.hpp"

namespace mforge::families {

struct Hypercube { std::size_t r = 1; };
struct CompleteBinaryTree { std::size_t depth = 0; };
struct Path { std::size_t n = 1; };
struct Cycle { std::size_t n = 3; };
struct Star { std::size_t m = 1; };
struct Complete { std::size_t n = 1; };
struct RandomRegular {
  std::size_t n = 0;
  std::size_t k = 3;
  std::uint64_t seed = 0;
};

using FamilySpec =
    std::variant<Hypercube, CompleteBinaryTree, Path, Cycle, Star, Complete, RandomRegular>;

/// Builds the family member with unit lengths and capacities.
///
/// Hypercube vertices are r-bit strings (vertex index = integer value), the
/// star's centre is vertex 0, the binary tree is heap-ordered. RandomRegular
/// uses the pairing model, rejecting configurations with loops or multi-edges,
/// and gives up with GenerationFailure after 1000 attempts.
WeightedGraph generate(const FamilySpec& spec);

/// Parses "hypercube 3", "random_regular 32 3 7", ... (params as listed).
FamilySpec parse_family(const std::string& name, const std::vector<std::string>& params,
                        std::uint64_t default_seed);
std::string describe(const FamilySpec& spec);

/// Shortest cycle length in edges; nullopt for forests.
std::optional<std::size_t> girth(const WeightedGraph& g);

struct SpectralExpansion {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  bool is_expander_proxy = false;
};

/// Second-largest adjacency eigenvalue of a regular graph (Jacobi solver).
SpectralExpansion spectral_expansion(const WeightedGraph& g);

/// Exact edge expansion by subset enumeration; n <= 22.
double edge_expansion_bruteforce(const WeightedGraph& g);

/// Resamples random_regular(n, k) until the girth reaches `min_girth`, at
/// most 500 times.
WeightedGraph random_regular_with_girth(std::size_t n, std::size_t k,
                                        std::size_t min_girth, std::uint64_t seed);

}  // namespace mforge::families
