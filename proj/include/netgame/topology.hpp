// Copyright 2026 The netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETGAME_TOPOLOGY_HPP_
#define NETGAME_TOPOLOGY_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace netgame {

// Undirected simple graph over nodes 0..n_nodes-1 (the AS graph).
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  // Edges are normalized to (min, max) and deduplicated. Throws
  // PreconditionError on self-loops or out-of-range endpoints.
  Graph(std::size_t n_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return n_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_.at(node); }

 private:
  std::size_t n_nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Lines of "u v"; an optional first data line "nodes K" fixes the node
// count (otherwise 1 + max id). Blank lines and lines starting with '#'
// are skipped. Throws FormatError carrying the line number.
Graph parse_edge_list(std::string_view text);

Graph load_edge_list(const std::string& path);

Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

struct ComponentInfo {
  std::size_t id = 0;    // components numbered by their smallest node
  std::size_t size = 0;
};

// Connected components of the subgraph induced by `adopters`. Only
// adopters appear in the result. Throws GameError on out-of-range nodes.
std::map<std::size_t, ComponentInfo> adopter_components(const Graph& graph,
                                                        const std::vector<std::size_t>& adopters);

}  // namespace netgame

#endif  // NETGAME_TOPOLOGY_HPP_
