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

#include "kanjinet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

#include "kanjinet/errors.hpp"
#include "kanjinet/rng.hpp"

namespace kanjinet {
namespace {

std::uint64_t pair_count(std::size_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// `count` distinct unordered pairs, drawn uniformly by rejection.
std::unordered_set<std::uint64_t> sample_pairs(std::size_t n, std::uint64_t count, Rng& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(count);
  while (chosen.size() < count) {
    auto u = rng.below(n);
    auto v = rng.below(n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert(u * n + v);
  }
  return chosen;
}

}  // namespace

void check_gnm_feasible(std::size_t n, std::size_t m) {
  if (m > pair_count(n)) {
    throw DomainError("G(n, m) infeasible: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                      std::to_string(pair_count(n)));
  }
}

SimpleGraph gnm_random(std::size_t n, std::size_t m, std::uint64_t seed) {
  check_gnm_feasible(n, m);
  const std::uint64_t total = pair_count(n);
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (4 * static_cast<std::uint64_t>(m) <= total) {
    const auto chosen = sample_pairs(n, m, rng);
    for (std::uint64_t key : chosen) {
      edges.emplace_back(static_cast<NodeId>(key / n), static_cast<NodeId>(key % n));
    }
  } else {
    const auto excluded = sample_pairs(n, total - m, rng);
    for (std::uint64_t u = 0; u < n; ++u) {
      for (std::uint64_t v = u + 1; v < n; ++v) {
        if (!excluded.count(u * n + v)) {
          edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
      }
    }
  }
  // The constructor sorts adjacency, so hash-set iteration order is irrelevant.
  return SimpleGraph(n, edges);
}

std::vector<double> draw_fitness(const FitnessConfig& cfg) {
  if (cfg.n < 2) throw DomainError("fitness network needs n >= 2");
  if (!(cfg.fitness.rate > 0.0)) throw DomainError("fitness rate must be positive");
  Rng rng(derive_seed(cfg.seed, 0));
  std::vector<double> x(cfg.n);
  for (double& xi : x) xi = rng.exponential(cfg.fitness.rate);
  return x;
}

SimpleGraph fitness_network(const FitnessConfig& cfg) {
  std::vector<double> x = draw_fitness(cfg);
  const std::size_t n = cfg.n;
  std::vector<Edge> edges;

  if (const auto* rule = std::get_if<ThresholdRule>(&cfg.link)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (x[i] + x[j] >= rule->z) edges.emplace_back(i, j);
      }
    }
  } else {
    const double c = std::get<ProductRule>(cfg.link).c;
    if (c < 0.0) throw DomainError("product-rule constant must be non-negative");
    Rng rng(derive_seed(cfg.seed, 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double p = std::min(1.0, c * x[i] * x[j]);
        if (rng.uniform() < p) edges.emplace_back(i, j);
      }
    }
  }

  SimpleGraph g(n, edges);
  g.set_fitness(std::move(x));
  return g;
}

std::uint64_t count_threshold_pairs(std::span<const double> fitness, double z) {
  std::vector<double> x(fitness.begin(), fitness.end());
  std::sort(x.begin(), x.end());
  // Two pointers: for each i, partners j > i with x_i + x_j >= z form a suffix.
  std::uint64_t count = 0;
  std::size_t j = x.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    while (j > 0 && x[i] + x[j - 1] >= z) --j;
    const std::size_t start = std::max(j, i + 1);
    count += x.size() - start;
  }
  return count;
}

double threshold_for_edge_count(std::span<const double> fitness, std::uint64_t m) {
  if (m > pair_count(fitness.size())) throw DomainError("more edges requested than pairs");
  const auto [min_it, max_it] = std::minmax_element(fitness.begin(), fitness.end());
  // count(lo) >= m > count(hi) throughout.
  double lo = 2.0 * *min_it;
  double hi = 2.0 * *max_it + 1.0;
  if (m == 0) return hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (count_threshold_pairs(fitness, mid) >= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<Char> cjk_labels(std::size_t n) {
  constexpr Char kUnifiedFirst = 0x4E00;
  constexpr Char kUnifiedLast = 0x9FFF;
  constexpr Char kExtAFirst = 0x3400;
  constexpr Char kExtALast = 0x4DBF;
  constexpr std::size_t kUnified = kUnifiedLast - kUnifiedFirst + 1;
  constexpr std::size_t kExtA = kExtALast - kExtAFirst + 1;
  if (n > kUnified + kExtA) {
    throw DomainError("synthetic labeling supports at most " + std::to_string(kUnified + kExtA) +
                      " nodes");
  }
  std::vector<Char> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i < kUnified ? static_cast<Char>(kUnifiedFirst + i)
                             : static_cast<Char>(kExtAFirst + (i - kUnified));
  }
  return labels;
}

std::vector<Compound> graph_to_corpus(const SimpleGraph& g, std::span<const Char> labeling) {
  if (labeling.size() != g.n_nodes()) throw DomainError("labeling must cover every node");
  std::unordered_set<Char> seen;
  for (Char c : labeling) {
    if (!seen.insert(c).second) {
      throw DomainError("labeling assigns " + to_utf8(c) + " to more than one node");
    }
  }
  std::vector<Compound> out;
  out.reserve(g.n_edges());
  for (const auto& [u, v] : g.edges()) out.push_back({labeling[u], labeling[v], 1});
  return out;
}

void write_corpus(std::ostream& out, std::span<const Compound> compounds) {
  for (const Compound& c : compounds) {
    const std::string word = to_utf8(c.upper) + to_utf8(c.lower);
    for (std::uint64_t i = 0; i < c.multiplicity; ++i) out << word << '\n';
  }
}

}  // namespace kanjinet
