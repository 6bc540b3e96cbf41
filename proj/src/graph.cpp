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

#include "kanjinet/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "kanjinet/errors.hpp"

namespace kanjinet {

NodeId MultiDigraph::add_node(Char label) {
  auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

void MultiDigraph::add_arc(NodeId from, NodeId to, std::uint64_t multiplicity) {
  if (from >= n_nodes() || to >= n_nodes()) throw std::out_of_range("arc endpoint is not a node");
  if (multiplicity == 0) throw DomainError("arc multiplicity must be positive");
  const std::uint64_t key = (static_cast<std::uint64_t>(from) << 32) | to;
  auto [it, inserted] = arc_index_.try_emplace(key, arcs_.size());
  if (inserted) {
    arcs_.push_back({from, to, multiplicity});
  } else {
    arcs_[it->second].multiplicity += multiplicity;
  }
}

std::optional<NodeId> MultiDigraph::find(Char label) const {
  if (auto it = ids_.find(label); it != ids_.end()) return it->second;
  return std::nullopt;
}

SimpleGraph::SimpleGraph(std::size_t n_nodes, std::span<const Edge> edges,
                         std::vector<Char> labels)
    : labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_nodes) {
    throw std::invalid_argument("label count does not match node count");
  }
  std::vector<std::size_t> degree(n_nodes + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n_nodes || v >= n_nodes) throw std::out_of_range("edge endpoint is not a node");
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n_nodes + 1, 0);
  for (std::size_t i = 0; i < n_nodes; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  targets_.resize(offsets_[n_nodes]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }

  // Sort and deduplicate each neighbor list, then compact.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const std::size_t end = offsets_[i + 1];
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets_[i] = write;
    for (auto it = first; it != last; ++it) targets_[write++] = *it;
    begin = end;
  }
  offsets_[n_nodes] = write;
  targets_.resize(write);
  targets_.shrink_to_fit();
}

bool SimpleGraph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges());
  for (NodeId u = 0; u < n_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string SimpleGraph::node_name(NodeId v) const {
  if (has_labels()) return to_utf8(label(v)) + " (#" + std::to_string(v) + ")";
  return "#" + std::to_string(v);
}

void SimpleGraph::set_fitness(std::vector<double> fitness) {
  if (!fitness.empty() && fitness.size() != n_nodes()) {
    throw std::invalid_argument("fitness count does not match node count");
  }
  fitness_ = std::move(fitness);
}

MultiDigraph build_multigraph(std::span<const Compound> compounds) {
  MultiDigraph g;
  for (const Compound& c : compounds) {
    const NodeId u = g.add_node(c.upper);
    const NodeId v = g.add_node(c.lower);
    g.add_arc(u, v, c.multiplicity);
  }
  return g;
}

SimpleGraph simplify(const MultiDigraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) {
    if (a.from != a.to) edges.emplace_back(a.from, a.to);
  }
  return SimpleGraph(g.n_nodes(), edges, g.labels());
}

ComponentPartition connected_components(const SimpleGraph& g) {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  ComponentPartition p;
  p.assignment.assign(g.n_nodes(), kUnassigned);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.n_nodes(); ++root) {
    if (p.assignment[root] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(p.sizes.size());
    std::size_t size = 0;
    p.assignment[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (p.assignment[w] == kUnassigned) {
          p.assignment[w] = id;
          stack.push_back(w);
        }
      }
    }
    p.sizes.push_back(size);
    if (size > p.sizes[p.maximal_id]) p.maximal_id = id;
  }
  return p;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).count() <= 1; }

Subgraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> keep) {
  Subgraph sub;
  sub.original_ids.assign(keep.begin(), keep.end());
  std::sort(sub.original_ids.begin(), sub.original_ids.end());

  constexpr auto kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> local(g.n_nodes(), kDropped);
  for (std::size_t i = 0; i < sub.original_ids.size(); ++i) {
    const NodeId v = sub.original_ids[i];
    if (v >= g.n_nodes()) throw std::out_of_range("node id out of range");
    if (local[v] != kDropped) throw std::invalid_argument("duplicate node in induced set");
    local[v] = static_cast<NodeId>(i);
  }

  std::vector<Edge> edges;
  std::vector<Char> labels;
  std::vector<double> fitness;
  for (const NodeId v : sub.original_ids) {
    for (NodeId w : g.neighbors(v)) {
      if (v < w && local[w] != kDropped) edges.emplace_back(local[v], local[w]);
    }
    if (g.has_labels()) labels.push_back(g.label(v));
    if (!g.fitness().empty()) fitness.push_back(g.fitness()[v]);
  }
  sub.graph = SimpleGraph(sub.original_ids.size(), edges, std::move(labels));
  sub.graph.set_fitness(std::move(fitness));
  return sub;
}

Subgraph extract_component(const SimpleGraph& g, const ComponentPartition& p,
                           std::uint32_t component) {
  if (component >= p.count()) {
    throw DomainError("unknown component id " + std::to_string(component));
  }
  std::vector<NodeId> members;
  members.reserve(p.sizes[component]);
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    if (p.assignment[v] == component) members.push_back(v);
  }
  return induced_subgraph(g, members);
}

Subgraph extract_maximal_component(const SimpleGraph& g) {
  if (g.n_nodes() == 0) return {};
  const ComponentPartition p = connected_components(g);
  return extract_component(g, p, p.maximal_id);
}

Restriction induced_subgraph(const SimpleGraph& g, const CharSet& keep) {
  if (!g.has_labels()) throw DomainError("restriction by character needs a labeled graph");
  Restriction r;
  std::vector<NodeId> members;
  std::set<Char> present;
  for (NodeId v = 0; v < g.n_nodes(); ++v) {
    if (keep.contains(g.label(v))) {
      members.push_back(v);
      present.insert(g.label(v));
    }
  }
  for (Char c : keep.members) {
    if (!present.count(c)) r.missing.push_back(c);
  }
  r.sub = induced_subgraph(g, members);
  if (members.empty()) {
    r.warning = "no node of the graph is in character set '" + keep.label + "'";
  }
  return r;
}

}  // namespace kanjinet
