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

// Connected induced subarchitectures and their isomorphism classes.
//
// Subsets are grown only through neighbors of the current subset, with the
// smallest member as root and an exclusive-neighborhood rule, so every
// connected subset is produced exactly once (no power-set scan).

#ifndef SUBARCH_ENUMERATION_HPP_
#define SUBARCH_ENUMERATION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "subarch/architecture.hpp"
#include "subarch/graph.hpp"
#include "subarch/parallel.hpp"

namespace subarch {

/// A concrete connected induced subgraph of a parent architecture.
struct SubarchRef {
  std::string parent;
  VertexMask vertices = 0;
  /// Induced subgraph; vertex i is the i-th smallest member of `vertices`.
  Graph graph;
  std::string class_key;

  int size() const { return graph.vertex_count(); }
  std::vector<Vertex> vertex_list() const { return mask_to_vertices(vertices); }

  friend bool operator==(const SubarchRef&, const SubarchRef&) = default;
};

/// Builds the induced graph and class key. Throws UsageError if the subset
/// is empty, exceeds the architecture or is disconnected.
SubarchRef make_subarch(const Architecture& arch, VertexMask vertices);

struct IsoClass {
  /// Lexicographically least member subset of the class.
  SubarchRef representative;
  /// Every member subset, in lexicographic order.
  std::vector<VertexMask> placements;

  std::size_t multiplicity() const { return placements.size(); }
};

struct IsoClassSet {
  int size = 0;
  /// Sorted by class key.
  std::vector<IsoClass> classes;

  std::size_t connected_count() const;
};

/// All size-n subsets inducing a connected subgraph, lexicographically
/// ordered. Throws UsageError unless 1 <= n <= |g|.
std::vector<VertexMask> enumerate_connected(const Graph& g, int n);
std::vector<VertexMask> enumerate_connected(const Architecture& arch, int n);

/// Connected subsets of every size up to max_size in one sweep;
/// result[k] holds the size-k subsets in lexicographic order.
std::vector<std::vector<VertexMask>> enumerate_connected_by_size(
    const Graph& g, int max_size);

/// Groups `subsets` (all of one size) into isomorphism classes.
IsoClassSet classify(const Architecture& arch, int n,
                     const std::vector<VertexMask>& subsets,
                     const RunOptions& run = {});

IsoClassSet iso_classes(const Architecture& arch, int n,
                        const RunOptions& run = {});

struct CensusRow {
  int size = 0;
  std::size_t connected = 0;
  std::size_t classes = 0;
};

/// Counts per size over n = 1..|A|; the totals include every size from a
/// single qubit up to the whole device.
struct Census {
  std::vector<CensusRow> rows;
  std::size_t connected = 0;
  std::size_t non_isomorphic = 0;
};

Census census(const Architecture& arch, const RunOptions& run = {});

}  // namespace subarch

#endif  // SUBARCH_ENUMERATION_HPP_
