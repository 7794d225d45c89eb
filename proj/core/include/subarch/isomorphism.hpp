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

// Subgraph monomorphism, isomorphism and canonical labeling.
//
// Monomorphisms are non-induced: every pattern edge must map onto a host
// edge, but the host may have additional edges among the image vertices.
// Canonical keys are exact: two graphs have equal keys iff they are
// isomorphic. A key starts with cheap invariants (size, degree sequence,
// distance histogram) so that byte comparison separates most classes before
// reaching the canonical adjacency rows.

#ifndef SUBARCH_ISOMORPHISM_HPP_
#define SUBARCH_ISOMORPHISM_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subarch/graph.hpp"

namespace subarch {

/// Isomorphism invariants used as a prefilter.
struct GraphInvariant {
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<int> degrees;           // sorted descending
  std::vector<int> distance_counts;   // [d] = #unordered pairs at distance d;
                                      // last slot counts unreachable pairs

  friend bool operator==(const GraphInvariant&,
                         const GraphInvariant&) = default;
};

GraphInvariant graph_invariant(const Graph& g);

/// Necessary condition for `pattern` to be monomorphic into `host`: sizes,
/// edge counts and pointwise domination of the sorted degree sequences.
bool may_embed(const GraphInvariant& pattern, const GraphInvariant& host);

struct MatchOptions {
  /// Non-edges of the pattern must map onto host non-edges.
  bool induced = false;
  /// When both are set, every mapped pair must keep its distance exactly.
  const DistanceMatrix* pattern_distances = nullptr;
  const DistanceMatrix* host_distances = nullptr;
};

/// Calls `visit` for every monomorphism in backtracking order until it
/// returns false. Returns the number of embeddings visited.
std::size_t for_each_monomorphism(
    const Graph& pattern, const Graph& host,
    const std::function<bool(const Embedding&)>& visit,
    const MatchOptions& options = {});

/// First embedding in backtracking order, i.e. the deterministic least one.
std::optional<Embedding> find_monomorphism(const Graph& pattern,
                                           const Graph& host,
                                           const MatchOptions& options = {});

/// find_monomorphism(...).has_value(), with the invariant prefilter applied
/// first.
bool is_monomorphic(const Graph& pattern, const Graph& host);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Every automorphism of g as a vertex permutation.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);

struct CanonicalForm {
  /// label[v] = canonical position of vertex v.
  std::vector<Vertex> label;
  std::string key;
};

CanonicalForm canonical_form(const Graph& g);
std::string canonical_key(const Graph& g);

/// Lowercase hex rendering for text outputs.
std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace subarch

#endif  // SUBARCH_ISOMORPHISM_HPP_
