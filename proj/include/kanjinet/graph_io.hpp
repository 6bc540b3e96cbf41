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

#ifndef KANJINET_GRAPH_IO_HPP
#define KANJINET_GRAPH_IO_HPP

#include <iosfwd>

#include "kanjinet/graph.hpp"

namespace kanjinet {

/// Graph file format (JSON):
///
///   {"n_nodes": N, "labels": ["山", ...], "edges": [[u, v], ...]}
///
/// Edges carry u < v and are sorted. `labels` is empty for unlabeled graphs.
/// Generated hosts add a "fitness" array.
void write_graph_json(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_graph_json(std::istream& in);

}  // namespace kanjinet

#endif  // KANJINET_GRAPH_IO_HPP
