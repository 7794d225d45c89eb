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

#include "subarch/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"

namespace subarch {
namespace {

class ConnectedSubsets {
 public:
  ConnectedSubsets(const Graph& g, int max_size)
      : g_(g), max_(max_size), out_(max_size + 1) {}

  std::vector<std::vector<VertexMask>> Run() {
    for (Vertex root = 0; root < g_.vertex_count(); ++root) {
      above_ = g_.all_vertices() & ~low_mask(root + 1);
      const VertexMask start = bit(root);
      Extend(start, g_.neighbors(root) & above_,
             start | g_.neighbors(root));
    }
    for (auto& level : out_) std::sort(level.begin(), level.end(), lex_less);
    return std::move(out_);
  }

 private:
  // `closed` is the closed neighborhood of `subset`; a vertex enters the
  // extension set only through the first subset member adjacent to it.
  void Extend(VertexMask subset, VertexMask extension, VertexMask closed) {
    const int k = popcount(subset);
    out_[k].push_back(subset);
    if (k == max_) return;
    while (extension != 0) {
      const Vertex w = lowest(extension);
      extension &= extension - 1;
      const VertexMask exclusive = g_.neighbors(w) & ~closed & above_;
      Extend(subset | bit(w), extension | exclusive,
             closed | g_.neighbors(w));
    }
  }

  const Graph& g_;
  int max_;
  VertexMask above_ = 0;
  std::vector<std::vector<VertexMask>> out_;
};

}  // namespace

SubarchRef make_subarch(const Architecture& arch, VertexMask vertices) {
  if (vertices == 0) throw UsageError("subarchitecture is empty");
  if ((vertices & ~arch.graph().all_vertices()) != 0) {
    throw UsageError("subarchitecture uses qubits outside '" + arch.name() +
                     "'");
  }
  if (!is_connected(arch.graph(), vertices)) {
    throw UsageError("subarchitecture is not connected");
  }
  SubarchRef ref;
  ref.parent = arch.name();
  ref.vertices = vertices;
  ref.graph = induced_subgraph(arch.graph(), vertices);
  ref.class_key = canonical_key(ref.graph);
  return ref;
}

std::size_t IsoClassSet::connected_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.multiplicity();
  return total;
}

std::vector<std::vector<VertexMask>> enumerate_connected_by_size(
    const Graph& g, int max_size) {
  max_size = std::clamp(max_size, 0, g.vertex_count());
  return ConnectedSubsets(g, max_size).Run();
}

std::vector<VertexMask> enumerate_connected(const Graph& g, int n) {
  if (n < 1 || n > g.vertex_count()) {
    throw UsageError("subarchitecture size " + std::to_string(n) +
                     " outside [1, " + std::to_string(g.vertex_count()) + "]");
  }
  auto levels = enumerate_connected_by_size(g, n);
  return std::move(levels[n]);
}

std::vector<VertexMask> enumerate_connected(const Architecture& arch, int n) {
  return enumerate_connected(arch.graph(), n);
}

IsoClassSet classify(const Architecture& arch, int n,
                     const std::vector<VertexMask>& subsets,
                     const RunOptions& run) {
  std::vector<std::string> keys(subsets.size());
  parallel_for(subsets.size(), run.jobs, [&](std::size_t i) {
    keys[i] = canonical_key(induced_subgraph(arch.graph(), subsets[i]));
  });
  std::vector<std::size_t> order(subsets.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return lex_less(subsets[a], subsets[b]);
  });
  IsoClassSet out;
  out.size = n;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t idx = order[i];
    if (i == 0 || keys[idx] != keys[order[i - 1]]) {
      IsoClass c;
      c.representative.parent = arch.name();
      c.representative.vertices = subsets[idx];
      c.representative.graph = induced_subgraph(arch.graph(), subsets[idx]);
      c.representative.class_key = keys[idx];
      out.classes.push_back(std::move(c));
    }
    out.classes.back().placements.push_back(subsets[idx]);
  }
  return out;
}

IsoClassSet iso_classes(const Architecture& arch, int n,
                        const RunOptions& run) {
  return classify(arch, n, enumerate_connected(arch, n), run);
}

Census census(const Architecture& arch, const RunOptions& run) {
  auto levels = enumerate_connected_by_size(arch.graph(), arch.size());
  Census c;
  for (int n = 1; n <= arch.size(); ++n) {
    run.check_deadline("census");
    const IsoClassSet set = classify(arch, n, levels[n], run);
    c.rows.push_back({n, levels[n].size(), set.classes.size()});
    c.connected += levels[n].size();
    c.non_isomorphic += set.classes.size();
  }
  return c;
}

}  // namespace subarch
