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

#ifndef KANJINET_INVASION_HPP
#define KANJINET_INVASION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kanjinet/graph.hpp"
#include "kanjinet/metrics.hpp"
#include "kanjinet/rng.hpp"

namespace kanjinet {

// Invasion weight k^alpha, evaluated as exp(alpha ln k). Exactly 1 for
// alpha == 0.
double invasion_weight(std::size_t degree, double alpha);

// p_i = k_i^alpha / sum_j k_j^alpha over a candidate set.
std::vector<double> selection_probabilities(std::span<const std::size_t> degrees, double alpha);

/// Complete binary tree of non-negative weights indexed by node id. Internal
/// sums are recomputed from their children on every update, so removed
/// entries are exactly zero. find() is inverse-transform sampling over the
/// weights in id order.
class CumulativeWeightTree {
 public:
  explicit CumulativeWeightTree(std::size_t size);

  void set(std::size_t index, double weight);
  double weight(std::size_t index) const { return sums_[leaves_ + index]; }
  double total() const { return sums_[1]; }

  // Index i with prefix(i) <= target < prefix(i) + weight(i), for
  // 0 <= target < total(). Never returns a zero-weight index.
  std::size_t find(double target) const;

 private:
  std::size_t leaves_;
  std::vector<double> sums_;
};

/// One realization of the invasion process on a host graph.
///
/// A start node is invaded first. Each step() then invades one node of the
/// frontier (uninvaded nodes adjacent to the invaded cluster), chosen with
/// probability proportional to k^alpha, where k is its degree in the host.
/// The invaded set therefore stays connected.
class InvasionProcess {
 public:
  // Without `start`, the start node is drawn uniformly from all host nodes.
  InvasionProcess(const SimpleGraph& host, double alpha, std::uint64_t seed,
                  std::optional<NodeId> start = std::nullopt);

  // Invades one frontier node and returns it. Throws DomainError when the
  // frontier is empty (the invaded cluster fills its component).
  NodeId step();

  bool frontier_empty() const { return tree_.total() == 0.0; }
  const std::vector<NodeId>& invaded() const { return order_; }
  bool is_invaded(NodeId v) const { return state_[v] == kInvaded; }

  // Frontier in ascending id order, with matching selection probabilities.
  std::vector<NodeId> frontier() const;
  std::vector<double> frontier_probabilities() const;

  // Edges of the host with both ends invaded.
  std::size_t internal_edges() const { return internal_edges_; }

  const SimpleGraph& host() const { return *host_; }
  double alpha() const { return alpha_; }

 private:
  static constexpr char kUntouched = 0;
  static constexpr char kFrontier = 1;
  static constexpr char kInvaded = 2;

  void invade(NodeId v);

  const SimpleGraph* host_;
  double alpha_;
  Rng rng_;
  std::vector<char> state_;
  CumulativeWeightTree tree_;
  std::vector<NodeId> order_;
  std::size_t internal_edges_ = 0;
};

enum class RunMetrics {
  degree_only,  // n_nodes, n_edges, avg_degree, clustering
  full,         // plus mean path length and diameter
};

struct InvasionOptions {
  std::optional<NodeId> start_node;
  RunMetrics metrics = RunMetrics::full;
};

struct InvasionRun {
  std::vector<NodeId> invaded_nodes;  // invasion order
  Subgraph induced;
  NetworkMetrics metrics;
  std::uint64_t seed = 0;
};

struct SummaryStat {
  double mean = 0.0;
  double std = 0.0;
};

struct EnsembleResult {
  std::size_t target_size = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  SummaryStat avg_degree;
  std::optional<SummaryStat> mean_path_length;
  SummaryStat clustering;
  std::vector<InvasionRun> runs;  // run-index order; run r uses derive_seed(seed, r)
};

// Throws DomainError for target_size outside [1, n], negative alpha, or a
// disconnected host.
InvasionRun invade(const SimpleGraph& host, std::size_t target_size, double alpha,
                   std::uint64_t seed, const InvasionOptions& options = {});

EnsembleResult invade_ensemble(const SimpleGraph& host, std::size_t target_size, double alpha,
                               std::size_t runs, std::uint64_t seed,
                               const InvasionOptions& options = {});

// ---------------------------------------------------------------------------
// Calibration of alpha against a target average degree.

struct AlphaEvaluation {
  double alpha = 0.0;
  double mean_k = 0.0;
  double std_k = 0.0;
};

struct CalibrationOptions {
  double alpha_lo = 0.0;
  double alpha_hi = 2.0;
  std::size_t runs = 50;
  double tol = 0.05;           // on mean <k>
  double min_interval = 0.01;  // stop once the alpha bracket is this narrow
  std::uint64_t seed = kDefaultSeed;
};

struct CalibrationResult {
  double alpha_star = 0.0;
  double target_k = 0.0;
  std::size_t target_size = 0;
  SummaryStat achieved_k;
  std::size_t runs = 0;
  double tol = 0.0;
  bool converged = false;  // |achieved_k.mean - target_k| <= tol
  std::vector<AlphaEvaluation> evaluations;  // in evaluation order
  std::uint64_t seed = 0;
};

/// Mean and spread of the invaded cluster's <k> over `runs` invasions. Run r
/// uses derive_seed(seed, r) at every alpha (common random numbers), the same
/// seeds invade_ensemble uses.
AlphaEvaluation evaluate_alpha(const SimpleGraph& host, std::size_t target_size, double alpha,
                               std::size_t runs, std::uint64_t seed);

std::vector<AlphaEvaluation> sweep_alpha(const SimpleGraph& host, std::size_t target_size,
                                         std::span<const double> alphas, std::size_t runs,
                                         std::uint64_t seed);

/// Bisection on alpha over the empirical mean <k>(alpha). The bracket ends are
/// evaluated first; a target outside [<k>(lo), <k>(hi)], or a flat bracket,
/// is a DomainError.
CalibrationResult calibrate_alpha(const SimpleGraph& host, std::size_t target_size,
                                  double target_k, const CalibrationOptions& options = {});

}  // namespace kanjinet

#endif  // KANJINET_INVASION_HPP
