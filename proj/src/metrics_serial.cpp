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

#include "kanjinet/metrics_serial.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "kanjinet/errors.hpp"
#include "kanjinet/generators.hpp"

namespace kanjinet::serial {

PathStatistics path_statistics(const SimpleGraph& g) {
  const std::size_t n = g.n_nodes();
  if (n < 2) throw DomainError("path statistics need at least two nodes");
  PathStatistics stats;
  std::uint64_t total = 0;
  for (NodeId s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<NodeId> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop();
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
    for (NodeId t = 0; t < n; ++t) {
      if (dist[t] < 0) {
        throw DisconnectedGraphError("graph is disconnected: no path between " + g.node_name(s) +
                                     " and " + g.node_name(t));
      }
      total += static_cast<std::uint64_t>(dist[t]);
      stats.diameter = std::max(stats.diameter, static_cast<std::uint32_t>(dist[t]));
    }
  }
  stats.sources = n;
  stats.mean_path_length =
      static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n - 1));
  return stats;
}

std::vector<double> local_clustering(const SimpleGraph& g) {
  std::vector<double> local(g.n_nodes(), 0.0);
  std::vector<char> mark(g.n_nodes(), 0);
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    for (NodeId w : nb) mark[w] = 1;
    std::size_t links = 0;
    for (NodeId w : nb) {
      for (NodeId x : g.neighbors(w)) links += mark[x];
    }
    for (NodeId w : nb) mark[w] = 0;
    // `links` counts each neighbor-neighbor edge from both ends.
    local[v] = static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
  }
  return local;
}

BaselineStats c_rand_baseline(std::size_t n, std::size_t m, std::size_t samples,
                              std::uint64_t seed) {
  if (samples == 0) throw DomainError("c_rand baseline needs at least one sample");
  std::vector<double> values;
  for (std::size_t s = 0; s < samples; ++s) {
    const SimpleGraph g = gnm_random(n, m, derive_seed(seed, s));
    const std::vector<double> local = serial::local_clustering(g);
    double sum = 0.0;
    for (double c : local) sum += c;
    values.push_back(n == 0 ? 0.0 : sum / static_cast<double>(n));
  }
  return summarize_samples(values, seed);
}

}  // namespace kanjinet::serial
