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

#include "kanjinet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

#include "kanjinet/errors.hpp"
#include "kanjinet/generators.hpp"

namespace kanjinet {
namespace {

constexpr auto kUnreached = static_cast<std::uint32_t>(-1);

struct SourceResult {
  std::uint64_t distance_sum = 0;
  std::uint32_t eccentricity = 0;
  NodeId unreached = static_cast<NodeId>(-1);  // some node BFS did not reach
};

// Level-synchronous BFS reusing caller-owned buffers.
SourceResult bfs(const SimpleGraph& g, NodeId source, std::vector<std::uint32_t>& dist,
                 std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  SourceResult r;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    const std::uint32_t next = dist[v] + 1;
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = next;
        r.distance_sum += next;
        r.eccentricity = next;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != g.n_nodes()) {
    for (NodeId v = 0; v < g.n_nodes(); ++v) {
      if (dist[v] == kUnreached) {
        r.unreached = v;
        break;
      }
    }
  }
  return r;
}

std::vector<NodeId> choose_sources(std::size_t n, const PathOptions& options) {
  std::vector<NodeId> sources(n);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  if (options.sample_sources == 0 || options.sample_sources >= n) return sources;
  // Partial Fisher-Yates, then restore id order.
  Rng rng(options.seed);
  for (std::size_t i = 0; i < options.sample_sources; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(sources[i], sources[j]);
  }
  sources.resize(options.sample_sources);
  std::sort(sources.begin(), sources.end());
  return sources;
}

}  // namespace

double average_degree(const SimpleGraph& g) {
  if (g.n_nodes() == 0) throw DomainError("average degree of an empty graph");
  return 2.0 * static_cast<double>(g.n_edges()) / static_cast<double>(g.n_nodes());
}

PathStatistics path_statistics(const SimpleGraph& g, const PathOptions& options) {
  const std::size_t n = g.n_nodes();
  if (n < 2) throw DomainError("path statistics need at least two nodes");

  const std::vector<NodeId> sources = choose_sources(n, options);
  std::vector<SourceResult> results(sources.size());

#pragma omp parallel
  {
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sources.size()); ++i) {
      results[i] = bfs(g, sources[i], dist, queue);
    }
  }

  PathStatistics stats;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (results[i].unreached != static_cast<NodeId>(-1)) {
      throw DisconnectedGraphError("graph is disconnected: no path between " +
                                   g.node_name(sources[i]) + " and " +
                                   g.node_name(results[i].unreached));
    }
    total += results[i].distance_sum;
    stats.diameter = std::max(stats.diameter, results[i].eccentricity);
  }
  stats.sources = sources.size();
  stats.approximate = sources.size() < n;
  stats.mean_path_length =
      static_cast<double>(total) / (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
  return stats;
}

double mean_path_length(const SimpleGraph& g) { return path_statistics(g).mean_path_length; }

std::uint32_t diameter(const SimpleGraph& g) { return path_statistics(g).diameter; }

std::vector<double> local_clustering(const SimpleGraph& g) {
  const auto n = static_cast<std::ptrdiff_t>(g.n_nodes());
  std::vector<double> local(g.n_nodes(), 0.0);
#pragma omp parallel
  {
    std::vector<char> mark(g.n_nodes(), 0);
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto nb = g.neighbors(static_cast<NodeId>(i));
      const std::size_t k = nb.size();
      if (k < 2) continue;
      for (NodeId w : nb) mark[w] = 1;
      // Each triangle through v is seen once from each of its two other corners.
      std::size_t twice_triangles = 0;
      for (NodeId w : nb) {
        for (NodeId x : g.neighbors(w)) twice_triangles += static_cast<unsigned char>(mark[x]);
      }
      for (NodeId w : nb) mark[w] = 0;
      local[i] = static_cast<double>(twice_triangles) / (static_cast<double>(k) * (k - 1));
    }
  }
  return local;
}

double clustering_coefficient(const SimpleGraph& g, LowDegreePolicy policy) {
  const std::vector<double> local = local_clustering(g);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    if (policy == LowDegreePolicy::exclude && g.degree(v) < 2) continue;
    sum += local[v];
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

BaselineStats c_rand_baseline(std::size_t n, std::size_t m, std::size_t samples,
                              std::uint64_t seed) {
  if (samples == 0) throw DomainError("c_rand baseline needs at least one sample");
  check_gnm_feasible(n, m);

  std::vector<double> values(samples);
  // The clustering kernel's own parallel region runs single-threaded when
  // nested inside this one.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(samples); ++s) {
    const auto stream = static_cast<std::uint64_t>(s);
    values[s] = clustering_coefficient(gnm_random(n, m, derive_seed(seed, stream)));
  }
  return summarize_samples(values, seed);
}

NetworkMetrics compute_metrics(const SimpleGraph& g, const MetricsOptions& options) {
  NetworkMetrics m;
  m.n_nodes = g.n_nodes();
  m.n_edges = g.n_edges();
  m.avg_degree = average_degree(g);
  if (options.paths && g.n_nodes() >= 2) {
    const PathStatistics paths = path_statistics(g, options.path);
    m.mean_path_length = paths.mean_path_length;
    m.diameter = paths.diameter;
    m.path_sources = paths.sources;
    m.path_approximate = paths.approximate;
  }
  m.clustering = clustering_coefficient(g, options.low_degree);
  if (options.crand_samples > 0) {
    m.c_rand = c_rand_baseline(g.n_nodes(), g.n_edges(), options.crand_samples,
                               options.crand_seed);
  }
  return m;
}

BaselineStats summarize_samples(std::span<const double> values, std::uint64_t seed) {
  BaselineStats stats;
  stats.samples = values.size();
  stats.seed = seed;
  double sum = 0.0;
  for (double v : values) sum += v;
  stats.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
    stats.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return stats;
}

}  // namespace kanjinet
