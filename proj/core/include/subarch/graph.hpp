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

// Undirected simple graphs over at most 64 vertices, hop-count distances and
// induced subgraphs. Adjacency is stored as one 64-bit row per vertex so that
// neighborhood intersections in the search routines are single AND ops.

#ifndef SUBARCH_GRAPH_HPP_
#define SUBARCH_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subarch {

using Vertex = int;
using VertexMask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

/// Orders masks by the lexicographic order of their ascending vertex lists.
bool lex_less(VertexMask a, VertexMask b);

class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws ValidationError on self-loops, duplicate edges (in either
  /// orientation) and out-of-range endpoints.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  VertexMask all_vertices() const { return low_mask(n_); }

  /// Normalized edge list: i < j, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws UsageError unless labels.size() == vertex_count().
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// All-pairs hop distances. Unreachable pairs hold kUnreachable, which
/// compares greater than every finite distance.
class DistanceMatrix {
 public:
  using Distance = std::uint16_t;
  static constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int size);

  int size() const { return n_; }
  Distance at(Vertex v, Vertex w) const {
    return d_[static_cast<std::size_t>(v) * n_ + w];
  }
  void set(Vertex v, Vertex w, Distance d) {
    d_[static_cast<std::size_t>(v) * n_ + w] = d;
  }
  bool finite(Vertex v, Vertex w) const { return at(v, w) != kUnreachable; }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Distance> d_;
};

/// Injective map from pattern vertices to host vertices.
struct Embedding {
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image[v]; }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

DistanceMatrix all_pairs_shortest_paths(const Graph& g);

/// BFS hop distances from `source` restricted to the vertices in `within`.
/// Entries outside `within` are kUnreachable.
std::vector<DistanceMatrix::Distance> bfs_distances(const Graph& g,
                                                   Vertex source,
                                                   VertexMask within);

bool is_connected(const Graph& g);
/// True iff the vertices of `subset` induce a connected subgraph. The empty
/// set is not connected.
bool is_connected(const Graph& g, VertexMask subset);

/// Throws ValidationError if g is disconnected or empty.
int diameter(const Graph& g);
int diameter(const DistanceMatrix& d);

/// Vertex i of the result corresponds to vertices[i]. Throws UsageError on
/// out-of-range or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, VertexMask subset);

// Small named families used throughout tests, examples and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

}  // namespace subarch

#endif  // SUBARCH_GRAPH_HPP_
