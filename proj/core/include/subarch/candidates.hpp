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

// Distance order between coupling graphs, desirable extensions of a
// subarchitecture and the per-size candidate sets derived from them.

#ifndef SUBARCH_CANDIDATES_HPP_
#define SUBARCH_CANDIDATES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subarch/architecture.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/graph.hpp"
#include "subarch/parallel.hpp"

namespace subarch {

/// Evidence for `smaller` embedding into `larger`.
struct OrderWitness {
  Embedding embedding;
  /// Pattern pairs whose distance shrinks under `embedding`. Empty iff the
  /// embedding keeps every distance.
  std::vector<std::pair<Vertex, Vertex>> strict_pairs;

  bool strict() const { return !strict_pairs.empty(); }
};

/// Absent if `smaller` has no monomorphism into `larger`. Otherwise a
/// distance-preserving embedding when one exists (searched exhaustively),
/// else the first monomorphism together with the pairs it shortens. The
/// strict order holds iff the returned witness is strict.
std::optional<OrderWitness> precedes(const Graph& smaller, const Graph& larger);

bool strictly_precedes(const Graph& smaller, const Graph& larger);

/// True iff some pair of `inner` is closer in the subgraph induced by
/// `outer` than in the one induced by `inner`. Throws UsageError unless
/// inner is a subset of outer and both are connected within `arch`.
bool strictly_extends(const Architecture& arch, VertexMask inner,
                      VertexMask outer);

/// Pairs of `seed` whose distance inside the seed exceeds their distance in
/// the full architecture.
std::vector<std::pair<Vertex, Vertex>> improvable_pairs(
    const Architecture& arch, VertexMask seed);

/// True iff every pair of `seed` has its device distance inside `superset`.
bool is_saturated(const Architecture& arch, VertexMask seed,
                  VertexMask superset);

struct DesirableOptions {
  /// Upper bound on simultaneously tracked partial supersets.
  std::size_t max_states = 10000;
};

/// Inclusion-minimal vertex supersets of `seed` that are connected and
/// restore every device distance between seed qubits, sorted by
/// (size, lexicographic). Returns {seed} if nothing is improvable. Throws
/// ResourceError past `options.max_states`.
std::vector<VertexMask> minimal_saturated_supersets(
    const Architecture& arch, VertexMask seed,
    const DesirableOptions& options = {});

/// minimal_saturated_supersets of one concrete subarchitecture, reduced to
/// one placement per isomorphism class, sorted by (size, class key).
std::vector<SubarchRef> desirable_set(const Architecture& arch,
                                      const SubarchRef& seed,
                                      const DesirableOptions& options = {});

struct CandidateSet {
  int size = 0;
  /// Sorted by (qubit count, class key); pairwise non-isomorphic.
  std::vector<SubarchRef> members;
  /// provenance[i] lists the class keys of the size-n classes that produced
  /// members[i].
  std::vector<std::vector<std::string>> provenance;
};

/// Union over the size-n classes of their desirable extensions.
///
/// A class contributes its own representative when none of its placements
/// has an improvable pair. Otherwise the saturated supersets of every
/// improvable placement are pooled and reduced to those not containing
/// another pooled graph of the same class.
CandidateSet candidates(const Architecture& arch, int n,
                        const RunOptions& run = {},
                        const DesirableOptions& options = {});

/// True iff every graph in `members` embeds into `host`; tests the cheap
/// invariants first.
bool contains_all(const Graph& host, const std::vector<SubarchRef>& members);

/// Smallest connected subarchitectures (one per class) containing every
/// candidate, searched upwards from the largest candidate size. Never
/// empty: the architecture itself always qualifies.
std::vector<SubarchRef> optimal_candidates(const Architecture& arch,
                                           const CandidateSet& cand,
                                           const RunOptions& run = {});
std::vector<SubarchRef> optimal_candidates(const Architecture& arch, int n,
                                           const RunOptions& run = {});

/// n(n-1)/2 * (d-1): the most qubits shortest-path completion can add to an
/// n-qubit seed on a device of diameter d.
long long added_qubit_bound(int n, int d);

}  // namespace subarch

#endif  // SUBARCH_CANDIDATES_HPP_
