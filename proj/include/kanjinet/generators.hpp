// Copyright 2026 The kanjinet Authors
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

#ifndef KANJINET_GENERATORS_HPP
#define KANJINET_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "kanjinet/corpus.hpp"
#include "kanjinet/graph.hpp"

namespace kanjinet {

// Throws DomainError unless 0 <= m <= n(n-1)/2.
void check_gnm_feasible(std::size_t n, std::size_t m);

/// Uniform sample of the simple graphs with n nodes and m edges. Distinct
/// node pairs are drawn by rejection while m is at most a quarter of all
/// pairs; above that the complement is sampled instead. Bit-exact per seed.
SimpleGraph gnm_random(std::size_t n, std::size_t m, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fitness model: node i carries fitness x_i ~ rho, and the pair {i, j} is
// linked with probability f(x_i, x_j).

struct ExponentialFitness {
  double rate = 1.0;
};

// f = 1 if x_i + x_j >= z else 0.
struct ThresholdRule {
  double z = 0.0;
};

// f = min(1, c x_i x_j).
struct ProductRule {
  double c = 0.0;
};

using LinkRule = std::variant<ThresholdRule, ProductRule>;

struct FitnessConfig {
  std::size_t n = 0;
  ExponentialFitness fitness;
  LinkRule link = ThresholdRule{};
  std::uint64_t seed = 0;
};

// Fitness values of a config; the same values fitness_network() uses.
std::vector<double> draw_fitness(const FitnessConfig& cfg);

// The generated graph keeps the fitness values as node metadata.
SimpleGraph fitness_network(const FitnessConfig& cfg);

// Number of pairs i < j with x_i + x_j >= z.
std::uint64_t count_threshold_pairs(std::span<const double> fitness, double z);

// Largest threshold z whose threshold graph has at least m edges (exactly m
// unless pair sums tie).
double threshold_for_edge_count(std::span<const double> fitness, std::uint64_t m);

// ---------------------------------------------------------------------------
// Synthetic corpora.

/// Default labels for synthetic graphs: consecutive code points from the CJK
/// Unified Ideographs block (U+4E00..U+9FFF), continuing into Extension A
/// (U+3400..U+4DBF). Throws DomainError beyond 27584 nodes.
std::vector<Char> cjk_labels(std::size_t n);

/// One compound per edge, oriented from the lower to the higher node id,
/// multiplicity 1. `labeling` must give each node a distinct character.
std::vector<Compound> graph_to_corpus(const SimpleGraph& g, std::span<const Char> labeling);

// Word-list format accepted by parse_compounds; one line per unit of
// multiplicity.
void write_corpus(std::ostream& out, std::span<const Compound> compounds);

}  // namespace kanjinet

#endif  // KANJINET_GENERATORS_HPP
