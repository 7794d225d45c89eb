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

#include "subarch/candidates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"

namespace subarch {
namespace {

constexpr int kFar = DistanceMatrix::kUnreachable;

int distance_within(const Graph& g, Vertex from, Vertex to,
                    VertexMask within) {
  VertexMask seen = bit(from);
  VertexMask frontier = seen;
  for (int d = 0; frontier != 0; ++d) {
    if (frontier & bit(to)) return d;
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex x) { next |= g.neighbors(x); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return kFar;
}

// Vertex sets of all shortest device paths between `from` and `to`.
std::vector<VertexMask> shortest_path_masks(const Architecture& arch,
                                            Vertex from, Vertex to) {
  const auto& d = arch.distances();
  const int length = d.at(from, to);
  std::set<VertexMask> out;
  std::vector<std::pair<Vertex, VertexMask>> stack{{from, bit(from)}};
  while (!stack.empty()) {
    auto [x, used] = stack.back();
    stack.pop_back();
    if (x == to) {
      out.insert(used);
      continue;
    }
    const int next_step = d.at(from, x) + 1;
    for_each_vertex(arch.graph().neighbors(x), [&](Vertex y) {
      if (d.at(from, y) == next_step && next_step + d.at(y, to) == length) {
        stack.emplace_back(y, used | bit(y));
      }
    });
  }
  return {out.begin(), out.end()};
}

bool size_then_lex(VertexMask a, VertexMask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

// Keeps the members of `sets` that contain no other member.
std::vector<VertexMask> inclusion_minimal(std::vector<VertexMask> sets) {
  std::sort(sets.begin(), sets.end(), size_then_lex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexMask> kept;
  for (VertexMask s : sets) {
    const bool covers_kept = std::any_of(
        kept.begin(), kept.end(), [&](VertexMask k) { return (k & s) == k; });
    if (!covers_kept) kept.push_back(s);
  }
  return kept;
}

void require_connected_subset(const Architecture& arch, VertexMask m,
                              const char* what) {
  if (m == 0 || (m & ~arch.graph().all_vertices()) != 0 ||
      !is_connected(arch.graph(), m)) {
    throw UsageError(std::string(what) +
                     " is not a connected subset of '" + arch.name() + "'");
  }
}

struct Prepared {
  const SubarchRef* ref;
  GraphInvariant invariant;
};

std::vector<Prepared> prepare(const std::vector<SubarchRef>& members) {
  std::vector<Prepared> out;
  for (const auto& m : members) out.push_back({&m, graph_invariant(m.graph)});
  // Larger graphs fail containment soonest.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.ref->size() > b.ref->size();
  });
  return out;
}

bool contains_prepared(const Graph& host, const std::vector<Prepared>& list) {
  const GraphInvariant hi = graph_invariant(host);
  for (const auto& p : list) {
    if (!may_embed(p.invariant, hi)) return false;
    if (!find_monomorphism(p.ref->graph, host)) return false;
  }
  return true;
}

}  // namespace

std::optional<OrderWitness> precedes(const Graph& smaller,
                                     const Graph& larger) {
  const DistanceMatrix ds = all_pairs_shortest_paths(smaller);
  const DistanceMatrix dl = all_pairs_shortest_paths(larger);
  MatchOptions keep;
  keep.pattern_distances = &ds;
  keep.host_distances = &dl;
  if (auto e = find_monomorphism(smaller, larger, keep)) {
    return OrderWitness{std::move(*e), {}};
  }
  auto e = find_monomorphism(smaller, larger);
  if (!e) return std::nullopt;
  OrderWitness w{std::move(*e), {}};
  for (Vertex v = 0; v < smaller.vertex_count(); ++v) {
    for (Vertex u = v + 1; u < smaller.vertex_count(); ++u) {
      if (ds.at(v, u) > dl.at(w.embedding(v), w.embedding(u))) {
        w.strict_pairs.emplace_back(v, u);
      }
    }
  }
  return w;
}

bool strictly_precedes(const Graph& smaller, const Graph& larger) {
  const auto w = precedes(smaller, larger);
  return w.has_value() && w->strict();
}

bool strictly_extends(const Architecture& arch, VertexMask inner,
                      VertexMask outer) {
  require_connected_subset(arch, inner, "inner subset");
  require_connected_subset(arch, outer, "outer subset");
  if ((inner & ~outer) != 0) {
    throw UsageError("inner subset is not contained in the outer subset");
  }
  const Graph& g = arch.graph();
  const auto members = mask_to_vertices(inner);
  for (Vertex v : members) {
    const auto narrow = bfs_distances(g, v, inner);
    const auto wide = bfs_distances(g, v, outer);
    for (Vertex w : members) {
      if (w > v && wide[w] < narrow[w]) return true;
    }
  }
  return false;
}

std::vector<std::pair<Vertex, Vertex>> improvable_pairs(
    const Architecture& arch, VertexMask seed) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto members = mask_to_vertices(seed);
  for (Vertex v : members) {
    const auto inside = bfs_distances(arch.graph(), v, seed);
    for (Vertex w : members) {
      if (w > v && inside[w] > arch.distances().at(v, w)) out.emplace_back(v, w);
    }
  }
  return out;
}

bool is_saturated(const Architecture& arch, VertexMask seed,
                  VertexMask superset) {
  const auto members = mask_to_vertices(seed);
  for (Vertex v : members) {
    const auto inside = bfs_distances(arch.graph(), v, superset);
    for (Vertex w : members) {
      if (inside[w] != arch.distances().at(v, w)) return false;
    }
  }
  return true;
}

std::vector<VertexMask> minimal_saturated_supersets(
    const Architecture& arch, VertexMask seed,
    const DesirableOptions& options) {
  require_connected_subset(arch, seed, "seed");
  const auto pairs = improvable_pairs(arch, seed);
  if (pairs.empty()) return {seed};
  // A saturated superset contains one shortest path per pair, so the
  // minimal ones are minimal unions of the seed with such paths. Supersets
  // of another partial state can be dropped after every pair: whatever
  // path the larger state already holds extends the smaller one too.
  std::vector<VertexMask> states{seed};
  for (auto [v, w] : pairs) {
    const int target = arch.distances().at(v, w);
    std::vector<VertexMask> paths;
    std::vector<VertexMask> next;
    for (VertexMask s : states) {
      if (distance_within(arch.graph(), v, w, s) == target) {
        next.push_back(s);
        continue;
      }
      if (paths.empty()) paths = shortest_path_masks(arch, v, w);
      for (VertexMask p : paths) next.push_back(s | p);
    }
    states = inclusion_minimal(std::move(next));
    if (states.size() > options.max_states) {
      throw ResourceError("desirable-set search exceeded " +
                          std::to_string(options.max_states) +
                          " partial supersets");
    }
  }
  return states;
}

std::vector<SubarchRef> desirable_set(const Architecture& arch,
                                      const SubarchRef& seed,
                                      const DesirableOptions& options) {
  std::map<std::string, SubarchRef> by_key;
  for (VertexMask t : minimal_saturated_supersets(arch, seed.vertices,
                                                  options)) {
    SubarchRef ref = make_subarch(arch, t);
    auto it = by_key.find(ref.class_key);
    if (it == by_key.end()) {
      by_key.emplace(ref.class_key, std::move(ref));
    } else if (lex_less(t, it->second.vertices)) {
      it->second = std::move(ref);
    }
  }
  std::vector<SubarchRef> out;
  for (auto& [key, ref] : by_key) out.push_back(std::move(ref));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

CandidateSet candidates(const Architecture& arch, int n,
                        const RunOptions& run,
                        const DesirableOptions& options) {
  const IsoClassSet classes = iso_classes(arch, n, run);
  std::vector<std::vector<SubarchRef>> per_class(classes.classes.size());
  parallel_for(classes.classes.size(), run.jobs, [&](std::size_t i) {
    run.check_deadline("candidate computation");
    const IsoClass& c = classes.classes[i];
    std::map<std::string, VertexMask> pool;
    for (VertexMask p : c.placements) {
      if (improvable_pairs(arch, p).empty()) continue;
      for (VertexMask t : minimal_saturated_supersets(arch, p, options)) {
        const std::string key =
            canonical_key(induced_subgraph(arch.graph(), t));
        auto [it, fresh] = pool.emplace(key, t);
        if (!fresh && lex_less(t, it->second)) it->second = t;
      }
    }
    if (pool.empty()) {
      per_class[i].push_back(c.representative);
      return;
    }
    std::vector<SubarchRef> grown;
    for (const auto& [key, t] : pool) grown.push_back(make_subarch(arch, t));
    for (const auto& g : grown) {
      const bool has_smaller = std::any_of(
          grown.begin(), grown.end(), [&](const SubarchRef& other) {
            return other.class_key != g.class_key &&
                   other.size() <= g.size() &&
                   is_monomorphic(other.graph, g.graph);
          });
      if (!has_smaller) per_class[i].push_back(g);
    }
  });

  std::map<std::pair<int, std::string>, std::size_t> index;
  CandidateSet out;
  out.size = n;
  std::vector<SubarchRef> members;
  std::vector<std::vector<std::string>> provenance;
  for (std::size_t i = 0; i < per_class.size(); ++i) {
    for (auto& ref : per_class[i]) {
      const auto id = std::make_pair(ref.size(), ref.class_key);
      auto it = index.find(id);
      if (it == index.end()) {
        index.emplace(id, members.size());
        members.push_back(std::move(ref));
        provenance.push_back({classes.classes[i].representative.class_key});
        continue;
      }
      if (lex_less(ref.vertices, members[it->second].vertices)) {
        members[it->second] = std::move(ref);
      }
      provenance[it->second].push_back(
          classes.classes[i].representative.class_key);
    }
  }
  for (const auto& [id, at] : index) {
    out.members.push_back(std::move(members[at]));
    out.provenance.push_back(std::move(provenance[at]));
  }
  return out;
}

bool contains_all(const Graph& host, const std::vector<SubarchRef>& members) {
  return contains_prepared(host, prepare(members));
}

std::vector<SubarchRef> optimal_candidates(const Architecture& arch,
                                           const CandidateSet& cand,
                                           const RunOptions& run) {
  if (cand.members.empty()) throw UsageError("candidate set is empty");
  const auto prepared = prepare(cand.members);
  int start = 0;
  for (const auto& m : cand.members) start = std::max(start, m.size());
  const auto levels = enumerate_connected_by_size(arch.graph(), arch.size());
  for (int m = start; m <= arch.size(); ++m) {
    run.check_deadline("optimal-candidate search");
    const IsoClassSet set = classify(arch, m, levels[m], run);
    std::vector<char> fits(set.classes.size(), 0);
    parallel_for(set.classes.size(), run.jobs, [&](std::size_t i) {
      run.check_deadline("optimal-candidate search");
      fits[i] = contains_prepared(set.classes[i].representative.graph,
                                  prepared);
    });
    std::vector<SubarchRef> out;
    for (std::size_t i = 0; i < fits.size(); ++i) {
      if (fits[i]) out.push_back(set.classes[i].representative);
    }
    if (!out.empty()) return out;
  }
  throw Error("no subarchitecture contains every candidate");
}

std::vector<SubarchRef> optimal_candidates(const Architecture& arch, int n,
                                           const RunOptions& run) {
  return optimal_candidates(arch, candidates(arch, n, run), run);
}

long long added_qubit_bound(int n, int d) {
  if (n < 1 || d < 1) throw UsageError("added_qubit_bound needs n, d >= 1");
  return static_cast<long long>(n) * (n - 1) / 2 * (d - 1);
}

}  // namespace subarch
