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

#include "subarch/mapping.hpp"

#include <deque>
#include <fstream>
#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"

namespace subarch {
namespace {

// Search states pack "which logical qubit sits on physical p" into 4-bit
// cells (0xF = free) and the next gate index into the top 16 bits.
constexpr int kCellLimit = 12;
constexpr std::uint64_t kFree = 0xF;
constexpr int kGateShift = 48;
constexpr std::uint64_t kCellMask = (std::uint64_t{1} << kGateShift) - 1;

std::uint64_t cell(std::uint64_t cells, Vertex p) {
  return (cells >> (4 * p)) & 0xF;
}

std::uint64_t with_cell(std::uint64_t cells, Vertex p, std::uint64_t q) {
  return (cells & ~(std::uint64_t{0xF} << (4 * p))) | (q << (4 * p));
}

std::uint64_t swap_cells(std::uint64_t cells, Vertex u, Vertex v) {
  const auto a = cell(cells, u), b = cell(cells, v);
  return with_cell(with_cell(cells, u, b), v, a);
}

std::uint64_t empty_cells(int physical) {
  std::uint64_t c = 0;
  for (Vertex p = 0; p < physical; ++p) c = with_cell(c, p, kFree);
  return c;
}

std::uint64_t cells_from(const std::vector<Vertex>& home, int physical) {
  std::uint64_t c = empty_cells(physical);
  for (std::size_t q = 0; q < home.size(); ++q) c = with_cell(c, home[q], q);
  return c;
}

std::vector<Vertex> homes(std::uint64_t cells, int physical, int qubits) {
  std::vector<Vertex> home(qubits, -1);
  for (Vertex p = 0; p < physical; ++p) {
    const auto q = cell(cells, p);
    if (q != kFree) home[q] = p;
  }
  return home;
}

VertexMask occupied(std::uint64_t cells, int physical) {
  VertexMask m = 0;
  for (Vertex p = 0; p < physical; ++p) {
    if (cell(cells, p) != kFree) m |= bit(p);
  }
  return m;
}

class Router {
 public:
  Router(const Circuit& c, const Graph& g, const OracleOptions& o)
      : circuit_(c), device_(g), options_(o),
        dist_(all_pairs_shortest_paths(g)) {}

  MappingResult Run() {
    const int physical = device_.vertex_count();
    PushRoots(physical);
    MappingResult result;
    const auto gate_count = static_cast<std::uint64_t>(circuit_.gates.size());
    while (!open_.empty()) {
      const auto [f, neg_g, key] = open_.top();
      open_.pop();
      const int g = -neg_g;
      if (seen_.at(key).cost != g) continue;
      if ((key >> kGateShift) == gate_count) {
        result.swap_count = g;
        Reconstruct(key, result);
        return result;
      }
      if (options_.budget && f >= *options_.budget) {
        result.swap_count = *options_.budget;
        result.budget_reached = true;
        return result;
      }
      ++result.states_expanded;
      const std::uint64_t cells = key & kCellMask;
      for (auto [u, v] : device_.edges()) {
        if (cell(cells, u) == kFree && cell(cells, v) == kFree) continue;
        const std::uint64_t next =
            Advance(swap_cells(cells, u, v), key >> kGateShift);
        Relax(next, g + 1, key, u, v);
      }
    }
    throw Error("router exhausted its state space");
  }

 private:
  struct Node {
    int cost = 0;
    std::uint64_t parent = 0;
    bool root = true;
    Vertex u = 0, v = 0;
  };

  // Executes gates while they act on adjacent qubits.
  std::uint64_t Advance(std::uint64_t cells, std::uint64_t next_gate) const {
    const auto home =
        homes(cells, device_.vertex_count(), circuit_.qubits);
    while (next_gate < circuit_.gates.size()) {
      const auto [a, b] = circuit_.gates[next_gate];
      if (!device_.has_edge(home[a], home[b])) break;
      ++next_gate;
    }
    return cells | (next_gate << kGateShift);
  }

  int LowerBound(std::uint64_t key) const {
    const std::uint64_t next_gate = key >> kGateShift;
    if (!options_.use_lower_bound || next_gate >= circuit_.gates.size()) {
      return 0;
    }
    const auto home =
        homes(key & kCellMask, device_.vertex_count(), circuit_.qubits);
    const auto [a, b] = circuit_.gates[next_gate];
    return dist_.at(home[a], home[b]) - 1;
  }

  void Relax(std::uint64_t key, int cost, std::uint64_t parent, Vertex u,
             Vertex v) {
    auto [it, fresh] = seen_.try_emplace(key);
    if (!fresh && it->second.cost <= cost) return;
    it->second = Node{cost, parent, false, u, v};
    open_.emplace(cost + LowerBound(key), -cost, key);
    if (seen_.size() > options_.max_states) {
      throw ResourceError("routing search exceeded " +
                          std::to_string(options_.max_states) + " states");
    }
  }

  void PushRoots(int physical) {
    // Placements related by a device automorphism route identically.
    const auto symmetries = automorphisms(device_);
    std::vector<Vertex> home(circuit_.qubits);
    VertexMask used = 0;
    std::function<void(int)> place = [&](int q) {
      if (q == circuit_.qubits) {
        std::uint64_t best = ~std::uint64_t{0};
        for (const auto& sigma : symmetries) {
          std::vector<Vertex> moved(home.size());
          for (std::size_t i = 0; i < home.size(); ++i) {
            moved[i] = sigma[home[i]];
          }
          best = std::min(best, cells_from(moved, physical));
        }
        const std::uint64_t key = Advance(best, 0);
        if (seen_.try_emplace(key, Node{0, 0, true, 0, 0}).second) {
          open_.emplace(LowerBound(key), 0, key);
          if (seen_.size() > options_.max_states) {
            throw ResourceError("routing search exceeded " +
                                std::to_string(options_.max_states) +
                                " initial placements");
          }
        }
        return;
      }
      for (Vertex p = 0; p < physical; ++p) {
        if (used & bit(p)) continue;
        used |= bit(p);
        home[q] = p;
        place(q + 1);
        used &= ~bit(p);
      }
    };
    place(0);
  }

  void Reconstruct(std::uint64_t key, MappingResult& result) const {
    std::vector<Edge> swaps;
    while (!seen_.at(key).root) {
      const Node& n = seen_.at(key);
      swaps.emplace_back(n.u, n.v);
      key = n.parent;
    }
    std::reverse(swaps.begin(), swaps.end());
    const int physical = device_.vertex_count();
    std::uint64_t cells = key & kCellMask;
    result.initial_assignment = homes(cells, physical, circuit_.qubits);
    std::size_t next_gate = 0;
    auto run_ready = [&] {
      const auto home = homes(cells, physical, circuit_.qubits);
      while (next_gate < circuit_.gates.size()) {
        const auto [a, b] = circuit_.gates[next_gate];
        if (!device_.has_edge(home[a], home[b])) break;
        result.schedule.push_back(
            {MappingStep::Kind::kGate, static_cast<int>(next_gate), 0, 0});
        ++next_gate;
      }
    };
    run_ready();
    for (auto [u, v] : swaps) {
      result.schedule.push_back({MappingStep::Kind::kSwap, 0, u, v});
      cells = swap_cells(cells, u, v);
      run_ready();
    }
  }

  const Circuit& circuit_;
  const Graph& device_;
  const OracleOptions& options_;
  DistanceMatrix dist_;
  std::unordered_map<std::uint64_t, Node> seen_;
  std::priority_queue<std::tuple<int, int, std::uint64_t>,
                      std::vector<std::tuple<int, int, std::uint64_t>>,
                      std::greater<>>
      open_;
};

// Breadth-first search over token placements starting at `start`; returns
// the first placement accepted by `done` with its distance.
std::pair<int, std::uint64_t> swap_search(
    const Graph& device, std::uint64_t start,
    const std::function<bool(std::uint64_t)>& done, std::size_t max_states) {
  std::unordered_map<std::uint64_t, int> dist{{start, 0}};
  std::deque<std::uint64_t> queue{start};
  while (!queue.empty()) {
    const std::uint64_t cells = queue.front();
    queue.pop_front();
    const int d = dist.at(cells);
    if (done(cells)) return {d, cells};
    for (auto [u, v] : device.edges()) {
      if (cell(cells, u) == kFree && cell(cells, v) == kFree) continue;
      const std::uint64_t next = swap_cells(cells, u, v);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
    if (dist.size() > max_states) {
      throw ResourceError("token-swapping search exceeded " +
                          std::to_string(max_states) + " states");
    }
  }
  throw UsageError("target placement is unreachable");
}

void check_device(const Graph& device, int qubits, int max_physical) {
  if (!is_connected(device)) throw ValidationError("device is disconnected");
  if (device.vertex_count() > std::min(max_physical, kCellLimit)) {
    throw ResourceError("device has " + std::to_string(device.vertex_count()) +
                        " qubits; the exact router is limited to " +
                        std::to_string(std::min(max_physical, kCellLimit)));
  }
  if (qubits > device.vertex_count()) {
    throw UsageError("circuit uses " + std::to_string(qubits) +
                     " qubits but the device has " +
                     std::to_string(device.vertex_count()));
  }
}

}  // namespace

void validate(const Circuit& c) {
  if (c.qubits < 0) throw UsageError("negative qubit count");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto [a, b] = c.gates[i];
    if (a < 0 || b < 0 || a >= c.qubits || b >= c.qubits || a == b) {
      throw UsageError("gate " + std::to_string(i) + " has invalid operands " +
                       std::to_string(a) + ", " + std::to_string(b));
    }
  }
}

Circuit interaction_circuit(const Graph& g) {
  Circuit c;
  c.qubits = g.vertex_count();
  for (auto [u, v] : g.edges()) c.gates.emplace_back(u, v);
  return c;
}

Circuit repeat(const Circuit& c, int times) {
  if (times < 0) throw UsageError("repetition count must be >= 0");
  Circuit out;
  out.qubits = c.qubits;
  for (int i = 0; i < times; ++i) {
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
  }
  return out;
}

Circuit concat(const Circuit& first, const Circuit& second) {
  if (first.qubits != second.qubits) {
    throw UsageError("cannot concatenate circuits over " +
                     std::to_string(first.qubits) + " and " +
                     std::to_string(second.qubits) + " qubits");
  }
  Circuit out = first;
  out.gates.insert(out.gates.end(), second.gates.begin(), second.gates.end());
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> qubits;
  Circuit c;
  for (int number = 1; std::getline(in, line); ++number) {
    const std::string where = "line " + std::to_string(number) + ": ";
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream words(line);
    std::string verb;
    if (!(words >> verb)) continue;
    std::vector<long long> args;
    for (std::string w; words >> w;) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoll(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw ValidationError(where + "'" + w + "' is not an integer");
      }
    }
    if (verb == "qubits") {
      if (qubits) throw ValidationError(where + "duplicate qubits header");
      if (args.size() != 1 || args[0] < 0 || args[0] > kMaxVertices) {
        throw ValidationError(where + "expected 'qubits N' with 0 <= N <= " +
                              std::to_string(kMaxVertices));
      }
      qubits = static_cast<int>(args[0]);
      continue;
    }
    if (verb != "cx") {
      throw ValidationError(where + "unsupported gate '" + verb +
                            "' (only two-qubit 'cx' interactions)");
    }
    if (!qubits) throw ValidationError(where + "gate before 'qubits' header");
    if (args.size() != 2) throw ValidationError(where + "cx takes two qubits");
    if (args[0] < 0 || args[1] < 0 || args[0] >= *qubits ||
        args[1] >= *qubits || args[0] == args[1]) {
      throw ValidationError(where + "invalid operands for cx");
    }
    c.gates.emplace_back(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (!qubits) throw ValidationError("circuit has no 'qubits' header");
  c.qubits = *qubits;
  return c;
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open circuit file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

std::string circuit_to_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.qubits) + "\n";
  for (auto [a, b] : c.gates) {
    out += "cx " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

MappingResult s_opt(const Circuit& c, const Graph& device,
                    const OracleOptions& options) {
  validate(c);
  check_device(device, c.qubits, options.max_physical);
  if (static_cast<int>(c.gates.size()) > options.max_gates) {
    throw ResourceError("circuit has " + std::to_string(c.gates.size()) +
                        " gates; the exact router is limited to " +
                        std::to_string(options.max_gates));
  }
  return Router(c, device, options).Run();
}

std::optional<std::string> replay_error(const Circuit& c, const Graph& device,
                                        const MappingResult& r) {
  if (r.budget_reached) return "result carries no schedule";
  if (static_cast<int>(r.initial_assignment.size()) != c.qubits) {
    return "initial assignment has the wrong length";
  }
  std::vector<int> holder(device.vertex_count(), -1);
  std::vector<Vertex> home = r.initial_assignment;
  for (int q = 0; q < c.qubits; ++q) {
    const Vertex p = home[q];
    if (p < 0 || p >= device.vertex_count()) {
      return "logical " + std::to_string(q) + " placed off the device";
    }
    if (holder[p] != -1) return "physical " + std::to_string(p) + " reused";
    holder[p] = q;
  }
  std::size_t next_gate = 0;
  int swaps = 0;
  for (const auto& step : r.schedule) {
    if (step.kind == MappingStep::Kind::kSwap) {
      if (step.u < 0 || step.v < 0 || step.u >= device.vertex_count() ||
          step.v >= device.vertex_count() || !device.has_edge(step.u, step.v)) {
        return "swap on a non-edge";
      }
      std::swap(holder[step.u], holder[step.v]);
      if (holder[step.u] >= 0) home[holder[step.u]] = step.u;
      if (holder[step.v] >= 0) home[holder[step.v]] = step.v;
      ++swaps;
      continue;
    }
    if (step.gate != static_cast<int>(next_gate) ||
        next_gate >= c.gates.size()) {
      return "gate " + std::to_string(step.gate) + " out of order";
    }
    const auto [a, b] = c.gates[next_gate];
    if (!device.has_edge(home[a], home[b])) {
      return "gate " + std::to_string(next_gate) + " on distant qubits";
    }
    ++next_gate;
  }
  if (next_gate != c.gates.size()) return "not every gate was executed";
  if (swaps != r.swap_count) return "swap count does not match the schedule";
  return std::nullopt;
}

int token_swap_distance(const Graph& device, const std::vector<Vertex>& from,
                        const std::vector<Vertex>& to,
                        std::size_t max_states) {
  if (from.size() != to.size()) {
    throw UsageError("placements hold different numbers of tokens");
  }
  check_device(device, static_cast<int>(from.size()), kCellLimit);
  const int physical = device.vertex_count();
  const std::uint64_t target = cells_from(to, physical);
  return swap_search(
             device, cells_from(from, physical),
             [&](std::uint64_t cells) { return cells == target; }, max_states)
      .first;
}

WitnessReport separation_witness(const Graph& device, VertexMask first,
                               VertexMask second, std::optional<int> reps,
                               const OracleOptions& options) {
  if (popcount(first) != popcount(second)) {
    throw UsageError("witness subsets differ in size");
  }
  for (VertexMask m : {first, second}) {
    if (m == 0 || (m & ~device.all_vertices()) != 0 ||
        !is_connected(device, m)) {
      throw UsageError("witness subset is not a connected part of the device");
    }
  }
  const Graph g1 = induced_subgraph(device, first);
  const Graph g2 = induced_subgraph(device, second);
  if (are_isomorphic(g1, g2)) {
    throw UsageError("witness subsets are isomorphic");
  }
  if (reps && *reps < 0) throw UsageError("repetition count must be >= 0");
  check_device(device, g1.vertex_count(), options.max_physical);

  // Logical q starts on the q-th vertex of `first`; the second block is
  // labelled by wherever the cheapest relocation onto `second` leaves them.
  const int physical = device.vertex_count();
  const auto [swaps, landed] = swap_search(
      device, cells_from(mask_to_vertices(first), physical),
      [&](std::uint64_t cells) { return occupied(cells, physical) == second; },
      options.max_states);

  Circuit block1 = interaction_circuit(g1);
  Circuit block2;
  block2.qubits = g2.vertex_count();
  for (auto [u, v] : device.edges()) {
    if ((second & bit(u)) && (second & bit(v))) {
      block2.gates.emplace_back(static_cast<int>(cell(landed, u)),
                                static_cast<int>(cell(landed, v)));
    }
  }

  WitnessReport report;
  report.transform_swaps = swaps;
  report.reps = reps.value_or(swaps + 1);
  report.circuit = concat(repeat(block1, report.reps),
                          repeat(block2, report.reps));
  report.on_device = s_opt(report.circuit, device, options);
  report.on_first = s_opt(report.circuit, g1, options);
  report.on_second = s_opt(report.circuit, g2, options);
  return report;
}

CoverageReport::Verdict CoverageReport::verdict() const {
  if (first_cheaper == 0 && second_cheaper == 0) return Verdict::kEquivalent;
  if (second_cheaper == 0) return Verdict::kFirstBetter;
  if (first_cheaper == 0) return Verdict::kSecondBetter;
  return Verdict::kIncomparable;
}

const char* to_string(CoverageReport::Verdict v) {
  switch (v) {
    case CoverageReport::Verdict::kEquivalent:
      return "equivalent";
    case CoverageReport::Verdict::kFirstBetter:
      return "first-better";
    case CoverageReport::Verdict::kSecondBetter:
      return "second-better";
    case CoverageReport::Verdict::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

CoverageReport compare_coverage(const Graph& first, const Graph& second,
                                int n, int gate_budget,
                                const CoverageOptions& options) {
  if (n < 1 || n > std::min(first.vertex_count(), second.vertex_count())) {
    throw UsageError("circuit width must fit both devices");
  }
  if (gate_budget < 0) throw UsageError("gate budget must be >= 0");
  std::vector<Circuit::Gate> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  CoverageReport report;
  report.exhaustive = n <= 4 && gate_budget <= 4;

  auto route = [&](const Circuit& c) {
    ++report.circuits;
    const int c1 = s_opt(c, first, options.oracle).swap_count;
    const int c2 = s_opt(c, second, options.oracle).swap_count;
    if (c1 < c2) {
      if (report.first_cheaper++ == 0) {
        report.first_witness = c;
        report.first_witness_costs = {c1, c2};
      }
    } else if (c2 < c1) {
      if (report.second_cheaper++ == 0) {
        report.second_witness = c;
        report.second_witness_costs = {c1, c2};
      }
    }
  };

  Circuit c;
  c.qubits = n;
  if (report.exhaustive || pairs.empty()) {
    report.exhaustive = true;
    const int longest = pairs.empty() ? 0 : gate_budget;
    for (int length = 0; length <= longest; ++length) {
      std::vector<std::size_t> digit(length, 0);
      while (true) {
        c.gates.clear();
        for (auto d : digit) c.gates.push_back(pairs[d]);
        route(c);
        int pos = length - 1;
        while (pos >= 0 && ++digit[pos] == pairs.size()) digit[pos--] = 0;
        if (pos < 0) break;
      }
    }
    return report;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> length(1, std::max(gate_budget, 1));
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  for (std::size_t s = 0; s < options.samples; ++s) {
    c.gates.clear();
    for (int i = length(rng); i > 0; --i) c.gates.push_back(pairs[pick(rng)]);
    route(c);
  }
  return report;
}

}  // namespace subarch
