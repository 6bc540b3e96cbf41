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

#ifndef KANJINET_GRAPH_HPP
#define KANJINET_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kanjinet/corpus.hpp"

namespace kanjinet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  std::uint64_t multiplicity = 1;
};

/// The raw compound network: directed, with multi-edges (multiplicity) and
/// self-loops. Node ids are dense and assigned in first-appearance order.
class MultiDigraph {
 public:
  NodeId add_node(Char label);

  // Adds `multiplicity` to the arc from -> to, creating it if needed.
  void add_arc(NodeId from, NodeId to, std::uint64_t multiplicity);

  std::size_t n_nodes() const { return labels_.size(); }
  const std::vector<Char>& labels() const { return labels_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::optional<NodeId> find(Char label) const;

 private:
  std::vector<Char> labels_;
  std::unordered_map<Char, NodeId> ids_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::uint64_t, std::size_t> arc_index_;
};

/// Undirected, unweighted, loop-free graph in compressed adjacency form.
/// Neighbor lists are sorted and duplicate-free; adjacency is symmetric.
/// Immutable once constructed.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Self-loops in `edges` are dropped and duplicates (in either orientation)
  // merged. `labels` is either empty or has one entry per node.
  SimpleGraph(std::size_t n_nodes, std::span<const Edge> edges, std::vector<Char> labels = {});

  std::size_t n_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t n_edges() const { return targets_.size() / 2; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  bool has_edge(NodeId u, NodeId v) const;

  // Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Char>& labels() const { return labels_; }
  Char label(NodeId v) const { return labels_.at(v); }

  // Human-readable node name: its character when labeled, else "#id".
  std::string node_name(NodeId v) const;

  // Optional per-node scalar metadata (fitness values for generated hosts).
  const std::vector<double>& fitness() const { return fitness_; }
  void set_fitness(std::vector<double> fitness);

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<Char> labels_;
  std::vector<double> fitness_;
};

struct ComponentPartition {
  std::vector<std::uint32_t> assignment;  // node -> component
  std::vector<std::size_t> sizes;         // component -> node count
  std::uint32_t maximal_id = 0;

  std::size_t count() const { return sizes.size(); }
};

// A subgraph together with the id each of its nodes had in the parent graph.
struct Subgraph {
  SimpleGraph graph;
  std::vector<NodeId> original_ids;
};

struct Restriction {
  Subgraph sub;
  // Whitelisted characters that do not occur in the graph.
  std::vector<Char> missing;
  // Set when no node survived the restriction.
  std::optional<std::string> warning;
};

MultiDigraph build_multigraph(std::span<const Compound> compounds);

// Drops direction, multiplicity and self-loops. Nodes whose only arcs were
// self-loops remain as degree-0 nodes.
SimpleGraph simplify(const MultiDigraph& g);

/// Components are numbered in order of their smallest node id, so the
/// maximal component (largest, ties to the smallest minimum id) is the first
/// one of maximum size.
ComponentPartition connected_components(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

// Induced subgraph on `keep` (any order, no duplicates); node order follows
// ascending parent id.
Subgraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> keep);

Subgraph extract_component(const SimpleGraph& g, const ComponentPartition& p,
                           std::uint32_t component);

Subgraph extract_maximal_component(const SimpleGraph& g);

// Keeps the labeled nodes whose character is in `keep`. Requires labels.
Restriction induced_subgraph(const SimpleGraph& g, const CharSet& keep);

}  // namespace kanjinet

#endif  // KANJINET_GRAPH_HPP
