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

#include "kanjinet/invasion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kanjinet/errors.hpp"

namespace kanjinet {
namespace {

void check_invasion_args(const SimpleGraph& host, std::size_t target_size, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite non-negative number");
  }
  if (target_size < 1 || target_size > host.n_nodes()) {
    throw DomainError("target size " + std::to_string(target_size) + " outside [1, " +
                      std::to_string(host.n_nodes()) + "]");
  }
  if (!is_connected(host)) throw DomainError("invasion host graph must be connected");
}

SummaryStat summarize(std::span<const double> values) {
  const BaselineStats s = summarize_samples(values, 0);
  return {s.mean, s.std};
}

double run_average_degree(const SimpleGraph& host, std::size_t target_size, double alpha,
                          std::uint64_t seed) {
  InvasionProcess process(host, alpha, seed);
  while (process.invaded().size() < target_size) process.step();
  return 2.0 * static_cast<double>(process.internal_edges()) / static_cast<double>(target_size);
}

InvasionRun run_checked(const SimpleGraph& host, std::size_t target_size, double alpha,
                        std::uint64_t seed, const InvasionOptions& options) {
  InvasionProcess process(host, alpha, seed, options.start_node);
  while (process.invaded().size() < target_size) process.step();

  InvasionRun run;
  run.seed = seed;
  run.invaded_nodes = process.invaded();
  run.induced = induced_subgraph(host, run.invaded_nodes);
  MetricsOptions metrics;
  metrics.paths = options.metrics == RunMetrics::full;
  run.metrics = compute_metrics(run.induced.graph, metrics);
  return run;
}

}  // namespace

double invasion_weight(std::size_t degree, double alpha) {
  if (alpha == 0.0) return 1.0;
  return std::exp(alpha * std::log(static_cast<double>(degree)));
}

std::vector<double> selection_probabilities(std::span<const std::size_t> degrees, double alpha) {
  std::vector<double> p(degrees.size());
  double total = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    p[i] = invasion_weight(degrees[i], alpha);
    total += p[i];
  }
  for (double& pi : p) pi /= total;
  return p;
}

CumulativeWeightTree::CumulativeWeightTree(std::size_t size) : leaves_(1) {
  while (leaves_ < size) leaves_ *= 2;
  sums_.assign(2 * leaves_, 0.0);
}

void CumulativeWeightTree::set(std::size_t index, double weight) {
  std::size_t node = leaves_ + index;
  sums_[node] = weight;
  for (node /= 2; node >= 1; node /= 2) sums_[node] = sums_[2 * node] + sums_[2 * node + 1];
}

std::size_t CumulativeWeightTree::find(double target) const {
  std::size_t node = 1;
  while (node < leaves_) {
    const double left = sums_[2 * node];
    const double right = sums_[2 * node + 1];
    // Rounding can push `target` past a subtree's sum; never descend into an
    // empty subtree.
    if (right == 0.0 || (left > 0.0 && target < left)) {
      node = 2 * node;
    } else {
      target -= left;
      node = 2 * node + 1;
    }
  }
  return node - leaves_;
}

InvasionProcess::InvasionProcess(const SimpleGraph& host, double alpha, std::uint64_t seed,
                                 std::optional<NodeId> start)
    : host_(&host),
      alpha_(alpha),
      rng_(seed),
      state_(host.n_nodes(), kUntouched),
      tree_(host.n_nodes()) {
  if (host.n_nodes() == 0) throw DomainError("invasion host graph is empty");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite non-negative number");
  }
  NodeId first;
  if (start) {
    if (*start >= host.n_nodes()) throw DomainError("start node is not in the host graph");
    first = *start;
  } else {
    first = static_cast<NodeId>(rng_.below(host.n_nodes()));
  }
  order_.reserve(host.n_nodes());
  invade(first);
}

void InvasionProcess::invade(NodeId v) {
  state_[v] = kInvaded;
  tree_.set(v, 0.0);
  order_.push_back(v);
  for (NodeId w : host_->neighbors(v)) {
    if (state_[w] == kInvaded) {
      ++internal_edges_;
    } else if (state_[w] == kUntouched) {
      state_[w] = kFrontier;
      tree_.set(w, invasion_weight(host_->degree(w), alpha_));
    }
  }
}

NodeId InvasionProcess::step() {
  if (frontier_empty()) throw DomainError("invasion frontier is empty");
  const auto v = static_cast<NodeId>(tree_.find(rng_.uniform() * tree_.total()));
  invade(v);
  return v;
}

std::vector<NodeId> InvasionProcess::frontier() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < state_.size(); ++v) {
    if (state_[v] == kFrontier) out.push_back(v);
  }
  return out;
}

std::vector<double> InvasionProcess::frontier_probabilities() const {
  std::vector<std::size_t> degrees;
  for (NodeId v : frontier()) degrees.push_back(host_->degree(v));
  return selection_probabilities(degrees, alpha_);
}

InvasionRun invade(const SimpleGraph& host, std::size_t target_size, double alpha,
                   std::uint64_t seed, const InvasionOptions& options) {
  check_invasion_args(host, target_size, alpha);
  return run_checked(host, target_size, alpha, seed, options);
}

EnsembleResult invade_ensemble(const SimpleGraph& host, std::size_t target_size, double alpha,
                               std::size_t runs, std::uint64_t seed,
                               const InvasionOptions& options) {
  if (runs == 0) throw DomainError("ensemble needs at least one run");
  check_invasion_args(host, target_size, alpha);
  if (options.start_node && *options.start_node >= host.n_nodes()) {
    throw DomainError("start node is not in the host graph");
  }

  EnsembleResult result;
  result.target_size = target_size;
  result.alpha = alpha;
  result.seed = seed;
  result.runs.resize(runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(runs); ++r) {
    result.runs[r] =
        run_checked(host, target_size, alpha, derive_seed(seed, static_cast<std::uint64_t>(r)),
                    options);
  }

  std::vector<double> k;
  std::vector<double> c;
  std::vector<double> l;
  for (const InvasionRun& run : result.runs) {
    k.push_back(run.metrics.avg_degree);
    c.push_back(run.metrics.clustering);
    if (run.metrics.mean_path_length) l.push_back(*run.metrics.mean_path_length);
  }
  result.avg_degree = summarize(k);
  result.clustering = summarize(c);
  if (l.size() == runs) result.mean_path_length = summarize(l);
  return result;
}

AlphaEvaluation evaluate_alpha(const SimpleGraph& host, std::size_t target_size, double alpha,
                               std::size_t runs, std::uint64_t seed) {
  if (runs == 0) throw DomainError("evaluation needs at least one run");
  check_invasion_args(host, target_size, alpha);
  std::vector<double> k(runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(runs); ++r) {
    k[r] = run_average_degree(host, target_size, alpha,
                              derive_seed(seed, static_cast<std::uint64_t>(r)));
  }
  const SummaryStat s = summarize(k);
  return {alpha, s.mean, s.std};
}

std::vector<AlphaEvaluation> sweep_alpha(const SimpleGraph& host, std::size_t target_size,
                                         std::span<const double> alphas, std::size_t runs,
                                         std::uint64_t seed) {
  std::vector<AlphaEvaluation> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(evaluate_alpha(host, target_size, a, runs, seed));
  return out;
}

CalibrationResult calibrate_alpha(const SimpleGraph& host, std::size_t target_size,
                                  double target_k, const CalibrationOptions& options) {
  if (!(options.alpha_lo < options.alpha_hi)) throw DomainError("alpha range needs lo < hi");
  if (!(options.tol >= 0.0)) throw DomainError("tolerance must be non-negative");

  CalibrationResult result;
  result.target_k = target_k;
  result.target_size = target_size;
  result.runs = options.runs;
  result.tol = options.tol;
  result.seed = options.seed;

  auto evaluate = [&](double alpha) {
    result.evaluations.push_back(
        evaluate_alpha(host, target_size, alpha, options.runs, options.seed));
    return result.evaluations.back();
  };
  auto finish = [&](const AlphaEvaluation& e) {
    result.alpha_star = e.alpha;
    result.achieved_k = {e.mean_k, e.std_k};
    result.converged = std::abs(e.mean_k - target_k) <= options.tol;
    return result;
  };

  AlphaEvaluation lo = evaluate(options.alpha_lo);
  AlphaEvaluation hi = evaluate(options.alpha_hi);
  if (lo.mean_k == hi.mean_k) {
    throw DomainError("degenerate bracket: <k> = " + std::to_string(lo.mean_k) +
                      " at both alpha = " + std::to_string(lo.alpha) + " and alpha = " +
                      std::to_string(hi.alpha));
  }
  const bool increasing = hi.mean_k > lo.mean_k;
  const double k_min = std::min(lo.mean_k, hi.mean_k);
  const double k_max = std::max(lo.mean_k, hi.mean_k);
  if (target_k < k_min - options.tol || target_k > k_max + options.tol) {
    throw DomainError("target <k> = " + std::to_string(target_k) + " outside bracket [" +
                      std::to_string(k_min) + ", " + std::to_string(k_max) + "] for alpha in [" +
                      std::to_string(options.alpha_lo) + ", " +
                      std::to_string(options.alpha_hi) + "]");
  }
  if (std::abs(lo.mean_k - target_k) <= options.tol) return finish(lo);
  if (std::abs(hi.mean_k - target_k) <= options.tol) return finish(hi);

  AlphaEvaluation best = std::abs(lo.mean_k - target_k) <= std::abs(hi.mean_k - target_k) ? lo : hi;
  while (hi.alpha - lo.alpha >= options.min_interval) {
    const AlphaEvaluation mid = evaluate(lo.alpha + (hi.alpha - lo.alpha) / 2.0);
    if (std::abs(mid.mean_k - target_k) < std::abs(best.mean_k - target_k)) best = mid;
    if (std::abs(mid.mean_k - target_k) <= options.tol) return finish(mid);
    if ((mid.mean_k < target_k) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return finish(best);
}

}  // namespace kanjinet
