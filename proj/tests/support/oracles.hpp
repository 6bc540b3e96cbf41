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

#ifndef KANJINET_TESTS_ORACLES_HPP
#define KANJINET_TESTS_ORACLES_HPP

// Independent brute-force oracles. Nothing here calls into the kernels under
// test beyond the SimpleGraph accessors.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kanjinet/graph.hpp"

namespace oracle {

using kanjinet::NodeId;
using kanjinet::SimpleGraph;

inline std::vector<std::vector<bool>> adjacency_matrix(const SimpleGraph& g) {
  const std::size_t n = g.n_nodes();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) {
    a[u][v] = true;
    a[v][u] = true;
  }
  return a;
}

struct AllPairs {
  double mean = 0.0;
  long diameter = 0;
  bool connected = true;
};

inline AllPairs floyd_warshall(const SimpleGraph& g) {
  const std::size_t n = g.n_nodes();
  constexpr long kInf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  const auto a = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  AllPairs r;
  long sum = 0;
  long pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i][j] >= kInf) r.connected = false;
      sum += d[i][j];
      ++pairs;
      r.diameter = std::max(r.diameter, d[i][j]);
    }
  }
  r.mean = pairs == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(pairs);
  return r;
}

// Average over nodes of (linked neighbor pairs) / (neighbor pairs), 0 for
// degree < 2, by enumerating every node triple.
inline double brute_force_clustering(const SimpleGraph& g) {
  const std::size_t n = g.n_nodes();
  if (n == 0) return 0.0;
  const auto a = adjacency_matrix(g);
  long double total = 0.0L;
  for (std::size_t v = 0; v < n; ++v) {
    long pairs = 0;
    long linked = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a[v][i] && a[v][j]) {
          ++pairs;
          if (a[i][j]) ++linked;
        }
      }
    }
    if (pairs > 0) total += static_cast<long double>(linked) / pairs;
  }
  return static_cast<double>(total / n);
}

// Component id per node from the reflexive-transitive closure of adjacency;
// ids are the smallest member of each class.
inline std::vector<std::size_t> closure_components(const SimpleGraph& g) {
  const std::size_t n = g.n_nodes();
  auto reach = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) {
        id[i] = j;
        break;
      }
    }
  }
  return id;
}

// Random graph with `n` nodes: a random spanning tree (when `connected`) plus
// `extra` uniformly chosen additional pairs.
inline SimpleGraph random_graph(std::mt19937_64& gen, std::size_t n, std::size_t extra,
                                bool connected) {
  std::vector<kanjinet::Edge> edges;
  if (connected) {
    for (std::size_t v = 1; v < n; ++v) {
      std::uniform_int_distribution<std::size_t> parent(0, v - 1);
      edges.emplace_back(static_cast<NodeId>(parent(gen)), static_cast<NodeId>(v));
    }
  }
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t e = 0; e < extra; ++e) {
      edges.emplace_back(static_cast<NodeId>(pick(gen)), static_cast<NodeId>(pick(gen)));
    }
  }
  return SimpleGraph(n, edges);
}

inline SimpleGraph complete_graph(std::size_t n) {
  std::vector<kanjinet::Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, edges);
}

inline SimpleGraph path_graph(std::size_t n) {
  std::vector<kanjinet::Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return SimpleGraph(n, edges);
}

// Star K_{1,leaves} with the hub at node 0.
inline SimpleGraph star_graph(std::size_t leaves) {
  std::vector<kanjinet::Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return SimpleGraph(leaves + 1, edges);
}

}  // namespace oracle

#endif  // KANJINET_TESTS_ORACLES_HPP
