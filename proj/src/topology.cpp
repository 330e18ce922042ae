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

#include "netgame/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "netgame/errors.hpp"

namespace netgame {

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges) : n_nodes_(n_nodes) {
  for (auto& [u, v] : edges) {
    if (u == v) throw PreconditionError("self-loop at node " + std::to_string(u));
    if (u >= n_nodes || v >= n_nodes) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") outside node range " + std::to_string(n_nodes));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adjacency_.resize(n_nodes_);
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

long long parse_id(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw FormatError("'" + std::string(token) + "' is not an integer node id", line_no);
  }
  if (value < 0) throw FormatError("negative node id " + std::to_string(value), line_no);
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Graph::Edge> edges;
  std::optional<std::size_t> declared_nodes;
  std::size_t max_id = 0;
  bool any_edge = false;
  bool seen_data = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front() == "nodes") {
      if (seen_data) throw FormatError("'nodes' header must precede all edges", line_no);
      if (tokens.size() != 2) throw FormatError("expected 'nodes K'", line_no);
      declared_nodes = static_cast<std::size_t>(parse_id(tokens[1], line_no));
      seen_data = true;
    } else {
      if (tokens.size() != 2) {
        throw FormatError("expected two node ids, got " + std::to_string(tokens.size()) +
                          " fields", line_no);
      }
      const auto u = static_cast<std::size_t>(parse_id(tokens[0], line_no));
      const auto v = static_cast<std::size_t>(parse_id(tokens[1], line_no));
      if (u == v) throw FormatError("self-loop at node " + std::to_string(u), line_no);
      if (declared_nodes && (u >= *declared_nodes || v >= *declared_nodes)) {
        throw FormatError("node id exceeds declared node count " +
                          std::to_string(*declared_nodes), line_no);
      }
      max_id = std::max({max_id, u, v});
      any_edge = true;
      seen_data = true;
      edges.emplace_back(u, v);
    }
    if (end == text.size()) break;
  }
  const std::size_t n = declared_nodes ? *declared_nodes : (any_edge ? max_id + 1 : 0);
  return Graph(n, std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

Graph path_graph(std::size_t n) {
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

std::map<std::size_t, ComponentInfo> adopter_components(const Graph& graph,
                                                        const std::vector<std::size_t>& adopters) {
  const std::size_t n = graph.num_nodes();
  std::vector<char> is_adopter(n, 0);
  for (std::size_t node : adopters) {
    if (node >= n) {
      throw GameError("node " + std::to_string(node) + " is not in the graph (" +
                      std::to_string(n) + " nodes)");
    }
    is_adopter[node] = 1;
  }

  // union-find restricted to adopter-adopter edges
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& [u, v] : graph.edges()) {
    if (!is_adopter[u] || !is_adopter[v]) continue;
    const std::size_t ru = find(u);
    const std::size_t rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }

  std::map<std::size_t, std::size_t> sizes;  // root -> size; root is the smallest member
  for (std::size_t node = 0; node < n; ++node) {
    if (is_adopter[node]) ++sizes[find(node)];
  }
  std::map<std::size_t, ComponentInfo> result;
  for (std::size_t node = 0; node < n; ++node) {
    if (!is_adopter[node]) continue;
    const std::size_t root = find(node);
    result[node] = ComponentInfo{root, sizes[root]};
  }
  return result;
}

}  // namespace netgame
