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

// Two-qubit interaction circuits and an exact minimum-SWAP router for small
// devices.

#ifndef SUBARCH_MAPPING_HPP_
#define SUBARCH_MAPPING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subarch/graph.hpp"

namespace subarch {

/// Ordered two-qubit interactions over logical qubits 0..qubits-1.
struct Circuit {
  using Gate = std::pair<int, int>;

  int qubits = 0;
  std::vector<Gate> gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Throws UsageError on a gate with equal or out-of-range operands.
void validate(const Circuit& c);

/// One gate per edge of g, in sorted edge order.
Circuit interaction_circuit(const Graph& g);
Circuit repeat(const Circuit& c, int times);
/// Throws UsageError if the qubit counts differ.
Circuit concat(const Circuit& first, const Circuit& second);

/// Line format: "qubits N" once, then "cx a b" per gate. Blank lines and
/// text after '#' are ignored. Any other verb is a ValidationError naming
/// the line.
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::filesystem::path& path);
std::string circuit_to_text(const Circuit& c);

struct MappingStep {
  enum class Kind { kGate, kSwap };
  Kind kind = Kind::kGate;
  /// Gate index for kGate.
  int gate = 0;
  /// Physical edge for kSwap.
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const MappingStep&, const MappingStep&) = default;
};

struct MappingResult {
  int swap_count = 0;
  /// True if the search stopped at the budget; swap_count is then a lower
  /// bound equal to the budget and no schedule is given.
  bool budget_reached = false;
  /// initial_assignment[q] = physical qubit holding logical q.
  std::vector<Vertex> initial_assignment;
  std::vector<MappingStep> schedule;
  std::size_t states_expanded = 0;
};

struct OracleOptions {
  std::optional<int> budget;
  bool use_lower_bound = true;
  int max_physical = 10;
  int max_gates = 40;
  std::size_t max_states = 4'000'000;
};

/// Minimum SWAP count over every initial assignment and schedule executing
/// the gates in order. Throws ValidationError for a disconnected device,
/// UsageError if the circuit does not fit and ResourceError beyond the
/// configured limits.
MappingResult s_opt(const Circuit& c, const Graph& device,
                    const OracleOptions& options = {});

/// Replays `r` step by step. Returns a description of the first violation,
/// or nothing if every gate runs on adjacent qubits in order and the swap
/// count matches.
std::optional<std::string> replay_error(const Circuit& c, const Graph& device,
                                        const MappingResult& r);

/// Fewest swaps turning one placement into another on `device`, where
/// from[q] and to[q] are the physical homes of token q. Unoccupied vertices
/// are free. Throws ResourceError past `max_states`.
int token_swap_distance(const Graph& device, const std::vector<Vertex>& from,
                        const std::vector<Vertex>& to,
                        std::size_t max_states = 4'000'000);

struct WitnessReport {
  Circuit circuit;
  int reps = 0;
  /// Fewest swaps carrying the first placement onto the second, with the
  /// relabelling of the second block chosen to realise it.
  int transform_swaps = 0;
  MappingResult on_device;
  MappingResult on_first;
  MappingResult on_second;

  bool strict() const {
    return on_device.swap_count <
           std::min(on_first.swap_count, on_second.swap_count);
  }
};

/// Builds (G1)^r (G2)^r from the interaction circuits of two equal-size,
/// non-isomorphic connected subsets of `device` and routes it on the
/// device and on both induced subgraphs. `reps` defaults to
/// transform_swaps + 1.
WitnessReport separation_witness(const Graph& device, VertexMask first,
                               VertexMask second,
                               std::optional<int> reps = std::nullopt,
                               const OracleOptions& options = {});

struct CoverageOptions {
  /// Circuits drawn when the ensemble is too large to enumerate.
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  OracleOptions oracle;
};

struct CoverageReport {
  enum class Verdict { kEquivalent, kFirstBetter, kSecondBetter, kIncomparable };

  bool exhaustive = false;
  std::size_t circuits = 0;
  std::size_t first_cheaper = 0;
  std::size_t second_cheaper = 0;
  std::optional<Circuit> first_witness;
  std::optional<Circuit> second_witness;
  std::optional<std::pair<int, int>> first_witness_costs;
  std::optional<std::pair<int, int>> second_witness_costs;

  Verdict verdict() const;
};

const char* to_string(CoverageReport::Verdict v);

/// Routes n-qubit circuits of at most `gate_budget` gates on both devices.
/// Every such circuit is tried when n <= 4 and gate_budget <= 4; otherwise
/// a seeded sample is drawn and the report is evidence only.
CoverageReport compare_coverage(const Graph& first, const Graph& second,
                                int n, int gate_budget,
                                const CoverageOptions& options = {});

}  // namespace subarch

#endif  // SUBARCH_MAPPING_HPP_
