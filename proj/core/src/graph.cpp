// Copyright 2026 The subarch Authors
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

#include "subarch/graph.hpp"

#include <algorithm>
#include <string>

#include "subarch/error.hpp"

namespace subarch {

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw UsageError("vertex " + std::to_string(v) + " out of range");
    }
    m |= bit(v);
  }
  return m;
}

bool lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  if (diff == 0) return false;
  const Vertex first = lowest(diff);
  // The list holding `first` has the smaller entry at the first mismatch,
  // unless the other list has already run out.
  if ((a >> first) & 1U) return (b & ~low_mask(first)) != 0;
  return (a & ~low_mask(first)) == 0;
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw ValidationError("graph size " + std::to_string(vertex_count) +
                          " outside [0, " + std::to_string(kMaxVertices) +
                          "]");
  }
  adj_.assign(n_, 0);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges)
    : Graph(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    const std::string name =
        "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw ValidationError("edge " + name + " has an out-of-range endpoint");
    }
    if (u == v) throw ValidationError("edge " + name + " is a self-loop");
    if (has_edge(u, v)) throw ValidationError("duplicate edge " + name);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw UsageError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

DistanceMatrix::DistanceMatrix(int size)
    : n_(size), d_(static_cast<std::size_t>(size) * size, kUnreachable) {}

std::vector<DistanceMatrix::Distance> bfs_distances(const Graph& g,
                                                   Vertex source,
                                                   VertexMask within) {
  std::vector<DistanceMatrix::Distance> dist(g.vertex_count(),
                                             DistanceMatrix::kUnreachable);
  if (((within >> source) & 1U) == 0) return dist;
  dist[source] = 0;
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  DistanceMatrix::Distance level = 0;
  while (frontier != 0) {
    ++level;
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    for_each_vertex(next, [&](Vertex v) { dist[v] = level; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

DistanceMatrix all_pairs_shortest_paths(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v, g.all_vertices());
    for (Vertex w = 0; w < n; ++w) d.set(v, w, row[w]);
  }
  return d;
}

bool is_connected(const Graph& g, VertexMask subset) {
  if (subset == 0) return false;
  VertexMask seen = bit(lowest(subset));
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

bool is_connected(const Graph& g) {
  return is_connected(g, g.all_vertices());
}

int diameter(const DistanceMatrix& d) {
  if (d.size() == 0) throw ValidationError("diameter of an empty graph");
  int best = 0;
  for (Vertex v = 0; v < d.size(); ++v) {
    for (Vertex w = v + 1; w < d.size(); ++w) {
      if (!d.finite(v, w)) {
        throw ValidationError("diameter of a disconnected graph");
      }
      best = std::max<int>(best, d.at(v, w));
    }
  }
  return best;
}

int diameter(const Graph& g) { return diameter(all_pairs_shortest_paths(g)); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) {
      throw UsageError("induced_subgraph: vertex " + std::to_string(v) +
                       " out of range");
    }
    if (position[v] != -1) {
      throw UsageError("induced_subgraph: vertex " + std::to_string(v) +
                       " repeated");
    }
    position[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (position[u] >= 0 && position[v] >= 0) {
      edges.emplace_back(position[u], position[v]);
    }
  }
  Graph out(static_cast<int>(vertices.size()), edges);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    labels.reserve(vertices.size());
    for (Vertex v : vertices) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexMask subset) {
  if ((subset & ~g.all_vertices()) != 0) {
    throw UsageError("induced_subgraph: subset exceeds graph");
  }
  const auto vs = mask_to_vertices(subset);
  return induced_subgraph(g, vs);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

}  // namespace subarch
