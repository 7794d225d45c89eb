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

#include "subarch/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "subarch/error.hpp"

namespace subarch {
namespace {

// Backtracking monomorphism search. Pattern vertices are matched in a
// connectivity-first order so that almost every step is constrained by an
// already-mapped neighbor; candidate sets are then plain mask intersections.
class Matcher {
 public:
  Matcher(const Graph& pattern, const Graph& host, const MatchOptions& options)
      : p_(pattern), h_(host), opt_(options) {
    const int n = p_.vertex_count();
    image_.assign(n, -1);
    BuildOrder();
  }

  template <typename Visit>
  std::size_t Run(Visit&& visit) {
    if (p_.vertex_count() > h_.vertex_count()) return 0;
    if (p_.edge_count() > h_.edge_count()) return 0;
    count_ = 0;
    stop_ = false;
    Extend(0, 0, visit);
    return count_;
  }

 private:
  void BuildOrder() {
    const int n = p_.vertex_count();
    order_.clear();
    VertexMask placed = 0;
    while (static_cast<int>(order_.size()) < n) {
      Vertex best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (Vertex v = 0; v < n; ++v) {
        if ((placed >> v) & 1U) continue;
        const int links = popcount(p_.neighbors(v) & placed);
        const int degree = p_.degree(v);
        if (links > best_links ||
            (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  template <typename Visit>
  void Extend(std::size_t depth, VertexMask used, Visit& visit) {
    if (stop_) return;
    if (depth == order_.size()) {
      ++count_;
      Embedding e{image_};
      if (!visit(e)) stop_ = true;
      return;
    }
    const Vertex u = order_[depth];
    VertexMask candidates = h_.all_vertices() & ~used;
    VertexMask mapped_non_neighbors = 0;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      if (p_.has_edge(u, w)) {
        candidates &= h_.neighbors(image_[w]);
      } else if (opt_.induced) {
        mapped_non_neighbors |= bit(image_[w]);
      }
    }
    const int need = p_.degree(u);
    while (candidates != 0 && !stop_) {
      const Vertex x = lowest(candidates);
      candidates &= candidates - 1;
      if (h_.degree(x) < need) continue;
      if (opt_.induced && (h_.neighbors(x) & mapped_non_neighbors) != 0) {
        continue;
      }
      if (opt_.pattern_distances != nullptr &&
          opt_.host_distances != nullptr) {
        bool keeps = true;
        for (std::size_t i = 0; i < depth && keeps; ++i) {
          const Vertex w = order_[i];
          keeps = opt_.pattern_distances->at(u, w) ==
                  opt_.host_distances->at(x, image_[w]);
        }
        if (!keeps) continue;
      }
      image_[u] = x;
      Extend(depth + 1, used | bit(x), visit);
      image_[u] = -1;
    }
  }

  const Graph& p_;
  const Graph& h_;
  const MatchOptions& opt_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::size_t count_ = 0;
  bool stop_ = false;
};

// Canonical labeling by equitable refinement and individualization with
// automorphism pruning. Colors are cell start positions, so an ordered
// partition and its coloring are the same object.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalForm Run() {
    std::vector<int> color(n_, 0);
    Refine(color);
    Search(color, {});
    CanonicalForm out;
    out.label = best_color_;
    return out;
  }

  const std::vector<VertexMask>& best_rows() const { return best_rows_; }

 private:
  void Refine(std::vector<int>& color) const {
    std::vector<Vertex> order(n_);
    std::vector<std::vector<int>> sig(n_);
    int cells = CountCells(color);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(color[v]);
        const std::size_t start = s.size();
        for_each_vertex(g_.neighbors(v), [&](Vertex w) { s.push_back(color[w]); });
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] == sig[order[i - 1]]) {
          next[order[i]] = next[order[i - 1]];
        } else {
          next[order[i]] = i;
        }
      }
      color.swap(next);
      const int now = CountCells(color);
      if (now == cells) break;
      cells = now;
    }
  }

  int CountCells(const std::vector<int>& color) const {
    std::vector<char> seen(n_, 0);
    int cells = 0;
    for (int c : color) {
      if (!seen[c]) {
        seen[c] = 1;
        ++cells;
      }
    }
    return cells;
  }

  std::vector<VertexMask> Certificate(const std::vector<int>& color) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[color[v]] = v;
    std::vector<VertexMask> rows(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for_each_vertex(g_.neighbors(at[i]),
                      [&](Vertex w) { rows[i] |= bit(color[w]); });
    }
    return rows;
  }

  void Leaf(const std::vector<int>& color) {
    auto rows = Certificate(color);
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_color_ = color;
      return;
    }
    if (rows == best_rows_) {
      // color and best_color_ give the same labeled graph: record the
      // automorphism v -> vertex at best position color[v].
      std::vector<Vertex> at(n_);
      for (Vertex v = 0; v < n_; ++v) at[best_color_[v]] = v;
      std::vector<Vertex> aut(n_);
      bool identity = true;
      for (Vertex v = 0; v < n_; ++v) {
        aut[v] = at[color[v]];
        identity = identity && aut[v] == v;
      }
      if (!identity) automorphisms_.push_back(std::move(aut));
    }
  }

  Vertex Find(std::vector<Vertex>& parent, Vertex v) const {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void Search(const std::vector<int>& color, const std::vector<Vertex>& fixed) {
    // Target cell: first non-singleton cell in position order.
    std::vector<int> size(n_, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      Leaf(color);
      return;
    }
    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] == target) cell.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty() && SameOrbit(v, explored, fixed)) continue;
      explored.push_back(v);
      std::vector<int> child = color;
      for (Vertex w : cell) {
        if (w != v) child[w] = target + 1;
      }
      Refine(child);
      auto next_fixed = fixed;
      next_fixed.push_back(v);
      Search(child, next_fixed);
    }
  }

  // Orbit test under the subgroup generated by the known automorphisms that
  // fix every individualized vertex on the current path.
  bool SameOrbit(Vertex v, const std::vector<Vertex>& explored,
                 const std::vector<Vertex>& fixed) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& aut : automorphisms_) {
      bool stabilizes = true;
      for (Vertex f : fixed) {
        if (aut[f] != f) {
          stabilizes = false;
          break;
        }
      }
      if (!stabilizes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) {
        const Vertex a = Find(parent, x);
        const Vertex b = Find(parent, aut[x]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const Vertex root = Find(parent, v);
    for (Vertex e : explored) {
      if (Find(parent, e) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<VertexMask> best_rows_;
  std::vector<int> best_color_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

void put_u16(std::string& out, int v) {
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

}  // namespace

GraphInvariant graph_invariant(const Graph& g) {
  GraphInvariant inv;
  const int n = g.vertex_count();
  inv.vertex_count = n;
  inv.edge_count = static_cast<int>(g.edge_count());
  inv.degrees.reserve(n);
  for (Vertex v = 0; v < n; ++v) inv.degrees.push_back(g.degree(v));
  std::sort(inv.degrees.rbegin(), inv.degrees.rend());
  inv.distance_counts.assign(std::max(n, 1) + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    const auto row = bfs_distances(g, v, g.all_vertices());
    for (Vertex w = v + 1; w < n; ++w) {
      if (row[w] == DistanceMatrix::kUnreachable) {
        ++inv.distance_counts.back();
      } else {
        ++inv.distance_counts[row[w]];
      }
    }
  }
  return inv;
}

bool may_embed(const GraphInvariant& pattern, const GraphInvariant& host) {
  if (pattern.vertex_count > host.vertex_count) return false;
  if (pattern.edge_count > host.edge_count) return false;
  for (std::size_t i = 0; i < pattern.degrees.size(); ++i) {
    if (pattern.degrees[i] > host.degrees[i]) return false;
  }
  return true;
}

std::size_t for_each_monomorphism(
    const Graph& pattern, const Graph& host,
    const std::function<bool(const Embedding&)>& visit,
    const MatchOptions& options) {
  Matcher m(pattern, host, options);
  return m.Run([&](const Embedding& e) { return visit(e); });
}

std::optional<Embedding> find_monomorphism(const Graph& pattern,
                                           const Graph& host,
                                           const MatchOptions& options) {
  std::optional<Embedding> found;
  Matcher m(pattern, host, options);
  m.Run([&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

bool is_monomorphic(const Graph& pattern, const Graph& host) {
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count()) {
    return false;
  }
  std::vector<int> pd, hd;
  for (Vertex v = 0; v < pattern.vertex_count(); ++v) {
    pd.push_back(pattern.degree(v));
  }
  for (Vertex v = 0; v < host.vertex_count(); ++v) hd.push_back(host.degree(v));
  std::sort(pd.rbegin(), pd.rend());
  std::sort(hd.rbegin(), hd.rend());
  for (std::size_t i = 0; i < pd.size(); ++i) {
    if (pd[i] > hd[i]) return false;
  }
  return find_monomorphism(pattern, host).has_value();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  if (!(graph_invariant(a) == graph_invariant(b))) return false;
  // Equal vertex and edge counts make any monomorphism an isomorphism.
  return find_monomorphism(a, b).has_value();
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for_each_monomorphism(g, g, [&](const Embedding& e) {
    out.push_back(e.image);
    return true;
  });
  return out;
}

CanonicalForm canonical_form(const Graph& g) {
  const GraphInvariant inv = graph_invariant(g);
  std::string key;
  key.reserve(8 + inv.degrees.size() + 2 * inv.distance_counts.size() +
              8 * inv.vertex_count);
  key.push_back(static_cast<char>(inv.vertex_count));
  put_u16(key, inv.edge_count);
  for (int d : inv.degrees) key.push_back(static_cast<char>(d));
  for (int c : inv.distance_counts) put_u16(key, c);

  CanonicalForm form;
  if (g.vertex_count() == 0) {
    form.key = std::move(key);
    return form;
  }
  Canonicalizer canon(g);
  form = canon.Run();
  for (VertexMask row : canon.best_rows()) {
    for (int byte = 0; byte < (inv.vertex_count + 7) / 8; ++byte) {
      key.push_back(static_cast<char>((row >> (8 * byte)) & 0xff));
    }
  }
  form.key = std::move(key);
  return form;
}

std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ValidationError(std::string("invalid hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0) throw ValidationError("odd-length hex string");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

}  // namespace subarch
