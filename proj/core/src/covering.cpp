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

#include "subarch/covering.hpp"

#include <algorithm>

#include "subarch/error.hpp"

namespace subarch {
namespace {

bool contains(const Graph& host, const GraphInvariant& host_inv,
              const Graph& pattern, const GraphInvariant& pattern_inv) {
  return may_embed(pattern_inv, host_inv) &&
         find_monomorphism(pattern, host).has_value();
}

bool contains(const SubarchRef& host, const SubarchRef& pattern) {
  return contains(host.graph, graph_invariant(host.graph), pattern.graph,
                  graph_invariant(pattern.graph));
}

void sort_members(std::vector<SubarchRef>& members) {
  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.class_key < b.class_key;
  });
}

}  // namespace

CoveringQueue::CoveringQueue(const Architecture& arch,
                             const CandidateSet& cand, RunOptions run)
    : arch_(arch), run_(std::move(run)), members_(cand.members) {
  if (members_.empty()) throw UsageError("candidate set is empty");
  level_ = arch.size();
  for (const auto& m : members_) {
    level_ = std::min(level_, m.size());
    invariants_.push_back(graph_invariant(m.graph));
  }
  subsets_ = enumerate_connected_by_size(arch.graph(), arch.size());
  --level_;
}

void CoveringQueue::fill() {
  while (cursor_ >= pending_.size() && level_ < arch_.size()) {
    ++level_;
    run_.check_deadline("covering queue");
    const IsoClassSet set = classify(arch_, level_, subsets_[level_], run_);
    std::vector<char> keep(set.classes.size(), 0);
    parallel_for(set.classes.size(), run_.jobs, [&](std::size_t i) {
      const Graph& host = set.classes[i].representative.graph;
      const GraphInvariant hi = graph_invariant(host);
      for (std::size_t j = 0; j < members_.size() && !keep[i]; ++j) {
        keep[i] = members_[j].size() <= level_ &&
                  contains(host, hi, members_[j].graph, invariants_[j]);
      }
    });
    pending_.clear();
    cursor_ = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i]) pending_.push_back(set.classes[i].representative);
    }
  }
}

std::optional<SubarchRef> CoveringQueue::next() {
  fill();
  if (cursor_ >= pending_.size()) return std::nullopt;
  return pending_[cursor_++];
}

Covering cover(const Architecture& arch, const CandidateSet& cand,
               int max_elements, const RunOptions& run) {
  if (max_elements < 1) throw UsageError("covering bound must be >= 1");
  Covering out;
  out.size = cand.size;
  out.max_elements = max_elements;
  out.candidates = cand.members;
  std::vector<SubarchRef> members = cand.members;

  if (static_cast<int>(members.size()) > max_elements) {
    std::vector<char> absorbed(members.size(), 0);
    parallel_for(members.size(), run.jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j != i && members[j].size() >= members[i].size() &&
            contains(members[j], members[i])) {
          absorbed[i] = 1;
          return;
        }
      }
    });
    std::vector<SubarchRef> kept;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!absorbed[i]) kept.push_back(std::move(members[i]));
    }
    members = std::move(kept);
  }

  CoveringQueue queue(arch, cand, run);
  while (static_cast<int>(members.size()) > max_elements) {
    if (run.expired()) {
      throw ResourceError(
          "time limit exceeded while covering: " +
          std::to_string(members.size()) + " members left after " +
          std::to_string(out.popped) + " queue elements (level " +
          std::to_string(queue.level()) + ")");
    }
    auto next = queue.next();
    if (!next) throw Error("covering queue exhausted");
    ++out.popped;
    const GraphInvariant hi = graph_invariant(next->graph);
    std::vector<char> inside(members.size(), 0);
    parallel_for(members.size(), run.jobs, [&](std::size_t i) {
      inside[i] = contains(next->graph, hi, members[i].graph,
                           graph_invariant(members[i].graph));
    });
    if (std::count(inside.begin(), inside.end(), 1) <= 1) continue;
    std::vector<SubarchRef> kept;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!inside[i]) kept.push_back(std::move(members[i]));
    }
    kept.push_back(std::move(*next));
    members = std::move(kept);
  }
  sort_members(members);
  out.assignment = covering_assignment(members, out.candidates);
  out.members = std::move(members);
  return out;
}

Covering cover(const Architecture& arch, int n, int max_elements,
               const RunOptions& run) {
  if (max_elements < 1) throw UsageError("covering bound must be >= 1");
  return cover(arch, candidates(arch, n, run), max_elements, run);
}

std::vector<std::vector<std::size_t>> covering_assignment(
    const std::vector<SubarchRef>& members,
    const std::vector<SubarchRef>& candidates) {
  std::vector<std::vector<std::size_t>> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (contains(members[j], candidates[i])) out[i].push_back(j);
    }
    if (out[i].empty()) {
      throw Error("covering leaves candidate " + std::to_string(i) +
                  " uncovered");
    }
  }
  return out;
}

void check_covering(const Covering& c) {
  if (covering_assignment(c.members, c.candidates) != c.assignment) {
    throw Error("covering assignment is stale");
  }
}

}  // namespace subarch
