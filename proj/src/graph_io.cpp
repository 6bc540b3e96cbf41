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

#include "kanjinet/graph_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "kanjinet/errors.hpp"

namespace kanjinet {

using nlohmann::json;

void write_graph_json(std::ostream& out, const SimpleGraph& g) {
  json doc;
  doc["n_nodes"] = g.n_nodes();
  json labels = json::array();
  for (Char c : g.labels()) labels.push_back(to_utf8(c));
  doc["labels"] = std::move(labels);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  if (!g.fitness().empty()) doc["fitness"] = g.fitness();
  out << doc.dump() << '\n';
}

SimpleGraph read_graph_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("graph JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n_nodes").get<std::size_t>();
    std::vector<Char> labels;
    for (const auto& item : doc.value("labels", json::array())) {
      const std::u32string s = normalize_nfc(item.get<std::string>());
      if (s.size() != 1) throw ParseError(0, "graph label is not a single character");
      labels.push_back(s[0]);
    }
    if (!labels.empty() && labels.size() != n) {
      throw ParseError(0, "graph JSON: labels length differs from n_nodes");
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      const auto u = e.at(0).get<NodeId>();
      const auto v = e.at(1).get<NodeId>();
      if (e.size() != 2 || u >= n || v >= n) throw ParseError(0, "graph JSON: bad edge");
      edges.emplace_back(u, v);
    }
    SimpleGraph g(n, edges, std::move(labels));
    if (doc.contains("fitness")) g.set_fitness(doc["fitness"].get<std::vector<double>>());
    return g;
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("graph JSON: ") + e.what());
  }
}

}  // namespace kanjinet
