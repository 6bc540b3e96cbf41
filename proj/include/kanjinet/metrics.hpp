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

#ifndef KANJINET_METRICS_HPP
#define KANJINET_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kanjinet/graph.hpp"
#include "kanjinet/rng.hpp"

namespace kanjinet {

// Small-world statistics. Kernels run with OpenMP over sources / nodes /
// samples and reduce in index order, so results are bit-identical for any
// thread count. Serial reference versions live in metrics_serial.hpp.

struct PathStatistics {
  double mean_path_length = 0.0;
  std::uint32_t diameter = 0;
  std::size_t sources = 0;   // BFS sources used
  bool approximate = false;  // true when sources < n_nodes
};

struct PathOptions {
  // 0 means exact all-source BFS. Otherwise BFS from this many distinct
  // random sources; the diameter is then a lower bound.
  std::size_t sample_sources = 0;
  std::uint64_t seed = kDefaultSeed;
};

// How nodes with fewer than two neighbors enter the clustering average.
enum class LowDegreePolicy { count_as_zero, exclude };

struct BaselineStats {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single sample
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct NetworkMetrics {
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  double avg_degree = 0.0;
  // Unset for graphs with fewer than two nodes or when path statistics were
  // not requested.
  std::optional<double> mean_path_length;
  std::optional<std::uint32_t> diameter;
  double clustering = 0.0;
  std::optional<BaselineStats> c_rand;
  std::size_t path_sources = 0;
  bool path_approximate = false;
};

struct MetricsOptions {
  bool paths = true;
  PathOptions path;
  LowDegreePolicy low_degree = LowDegreePolicy::count_as_zero;
  std::size_t crand_samples = 0;
  std::uint64_t crand_seed = kDefaultSeed;
};

// 2M/N. Throws DomainError on an empty graph.
double average_degree(const SimpleGraph& g);

// Requires a connected graph with at least two nodes; otherwise throws
// (DisconnectedGraphError names an unreachable pair).
PathStatistics path_statistics(const SimpleGraph& g, const PathOptions& options = {});
double mean_path_length(const SimpleGraph& g);
std::uint32_t diameter(const SimpleGraph& g);

// Per-node C_i = 2 t_i / (k_i (k_i - 1)), 0 for k_i < 2.
std::vector<double> local_clustering(const SimpleGraph& g);

// Watts-Strogatz average of local_clustering.
double clustering_coefficient(const SimpleGraph& g,
                              LowDegreePolicy policy = LowDegreePolicy::count_as_zero);

// Clustering of `samples` uniform G(n, m) graphs; sample i is generated from
// derive_seed(seed, i).
BaselineStats c_rand_baseline(std::size_t n, std::size_t m, std::size_t samples,
                              std::uint64_t seed);

// Mean and sample standard deviation, accumulated in index order.
BaselineStats summarize_samples(std::span<const double> values, std::uint64_t seed);

NetworkMetrics compute_metrics(const SimpleGraph& g, const MetricsOptions& options = {});

// ---------------------------------------------------------------------------
// Degree distributions and power-law fits.

struct DegreeDistribution {
  std::map<std::size_t, std::uint64_t> counts;  // degree -> node count
  std::uint64_t n_nodes = 0;

  double fraction(std::size_t k) const;
};

enum class Binning { raw, log };

struct BinningSpec {
  Binning kind = Binning::log;
  double base = 2.0;
};

struct PowerLawFit {
  double gamma = 0.0;
  double stderr_gamma = 0.0;
  double r_squared = 0.0;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
  BinningSpec binning;
  std::size_t bins = 0;  // points entering the regression
};

DegreeDistribution degree_distribution(const SimpleGraph& g);

/// Least-squares fit of log p(k) against log k over [k_min, k_max].
///
/// Raw binning uses one point per nonempty degree. Log binning groups degrees
/// into [k_min b^i, k_min b^(i+1)), divides the bin's mass by the number of
/// integer degrees it spans, and places the point at the geometric mean of
/// those degrees. Empty bins are skipped; at least three points are needed.
PowerLawFit fit_power_law(const DegreeDistribution& d, std::size_t k_min, std::size_t k_max,
                          BinningSpec binning = {});

std::string binning_name(const BinningSpec& b);

// CSV with header `k,count,fraction`, rows ascending in k.
void write_degree_csv(std::ostream& out, const DegreeDistribution& d);
DegreeDistribution read_degree_csv(std::istream& in);

}  // namespace kanjinet

#endif  // KANJINET_METRICS_HPP
