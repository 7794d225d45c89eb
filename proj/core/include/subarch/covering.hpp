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

// Greedy merging of candidates into a bounded number of covering
// subarchitectures.

#ifndef SUBARCH_COVERING_HPP_
#define SUBARCH_COVERING_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "subarch/architecture.hpp"
#include "subarch/candidates.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/isomorphism.hpp"
#include "subarch/parallel.hpp"

namespace subarch {

/// Lazily yields one representative per isomorphism class of connected
/// subarchitectures that contain at least one candidate, by ascending
/// qubit count and then class key. The class of the full architecture is
/// always last.
class CoveringQueue {
 public:
  CoveringQueue(const Architecture& arch, const CandidateSet& cand,
                RunOptions run = {});

  std::optional<SubarchRef> next();
  /// Qubit count of the level currently being drained.
  int level() const { return level_; }

 private:
  void fill();

  const Architecture& arch_;
  RunOptions run_;
  std::vector<SubarchRef> members_;
  std::vector<GraphInvariant> invariants_;
  std::vector<std::vector<VertexMask>> subsets_;
  std::vector<SubarchRef> pending_;
  std::size_t cursor_ = 0;
  int level_ = 0;
};

struct Covering {
  int size = 0;
  int max_elements = 0;
  /// Sorted by (qubit count, class key).
  std::vector<SubarchRef> members;
  /// The candidates that had to be covered.
  std::vector<SubarchRef> candidates;
  /// assignment[i] = indices of members containing candidates[i].
  std::vector<std::vector<std::size_t>> assignment;
  /// Queue elements popped before the member bound was met.
  std::size_t popped = 0;
};

/// Starts from the candidates, drops members contained in another member,
/// then pops the queue: each popped graph replaces the members it contains
/// whenever it contains more than one. Stops once at most `max_elements`
/// remain. Throws UsageError if max_elements < 1 and ResourceError with the
/// progress so far when the deadline passes.
Covering cover(const Architecture& arch, const CandidateSet& cand,
               int max_elements, const RunOptions& run = {});
Covering cover(const Architecture& arch, int n, int max_elements,
               const RunOptions& run = {});

/// For each candidate, the indices of the members containing it. Throws
/// Error if some candidate is contained in no member.
std::vector<std::vector<std::size_t>> covering_assignment(
    const std::vector<SubarchRef>& members,
    const std::vector<SubarchRef>& candidates);

/// Throws Error unless every candidate is covered and `c.assignment` agrees
/// with a fresh computation.
void check_covering(const Covering& c);

}  // namespace subarch

#endif  // SUBARCH_COVERING_HPP_
